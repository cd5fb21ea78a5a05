#pragma once

/**
 * @file pgq.hpp
 * @brief 3-parameter generalized quaternions x0 + x1 i + x2 j + x3 k.
 *
 * Units multiply by
 *
 *          |  1    i          j          k
 *       ---+----------------------------------------
 *        1 |  1    i          j          k
 *        i |  i   -l1 l2      l1 k      -l2 j
 *        j |  j   -l1 k      -l1 l3      l3 i
 *        k |  k    l2 j      -l3 i      -l2 l3
 *
 * extended bilinearly over the coefficient field F (Rational or QuadExt).
 * (1,1,1) gives Hamilton's quaternions; zero lambdas are allowed and give
 * degenerate, non-division algebras.
 */

#include "hq3/errors.hpp"
#include "hq3/rational.hpp"

#include <array>
#include <memory>
#include <string>

namespace hq3 {

class PgqParams {
public:
    PgqParams() : PgqParams(Rational(1), Rational(1), Rational(1)) {}
    PgqParams(Rational l1, Rational l2, Rational l3)
        : s_(std::make_shared<const Structure>(Structure{l1, l2, l3, l1 * l2, l1 * l3, l2 * l3})) {}

    const Rational& l1() const { return s_->l1; }
    const Rational& l2() const { return s_->l2; }
    const Rational& l3() const { return s_->l3; }
    const Rational& l12() const { return s_->l12; }
    const Rational& l13() const { return s_->l13; }
    const Rational& l23() const { return s_->l23; }

    std::string str() const { return "(" + l1().str() + "," + l2().str() + "," + l3().str() + ")"; }

    friend bool operator==(const PgqParams& a, const PgqParams& b) {
        return a.s_ == b.s_ || (a.l1() == b.l1() && a.l2() == b.l2() && a.l3() == b.l3());
    }

private:
    struct Structure {
        Rational l1, l2, l3, l12, l13, l23;
    };
    std::shared_ptr<const Structure> s_;
};

template <class F>
class Pgq {
public:
    Pgq(F x0, F x1, F x2, F x3, PgqParams params)
        : x_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)}, params_(std::move(params)) {}

    static Pgq scalar(F c, const PgqParams& params) {
        F z = c - c;
        return Pgq(std::move(c), z, z, z, params);
    }
    static Pgq zero_like(const Pgq& other) {
        F z = other.x_[0] - other.x_[0];
        return Pgq(z, z, z, z, other.params_);
    }

    const F& operator[](std::size_t r) const { return x_[r]; }
    F& operator[](std::size_t r) { return x_[r]; }
    const std::array<F, 4>& coeffs() const { return x_; }
    const PgqParams& params() const { return params_; }

    bool is_zero() const {
        for (const auto& c : x_) {
            if (!(c == F(0))) return false;
        }
        return true;
    }

    Pgq& operator+=(const Pgq& o) {
        check(o);
        for (std::size_t r = 0; r < 4; ++r) x_[r] += o.x_[r];
        return *this;
    }
    Pgq& operator-=(const Pgq& o) {
        check(o);
        for (std::size_t r = 0; r < 4; ++r) x_[r] -= o.x_[r];
        return *this;
    }
    Pgq& operator*=(const F& c) {
        for (auto& v : x_) v = c * v;
        return *this;
    }

    friend Pgq operator+(Pgq a, const Pgq& b) { return a += b; }
    friend Pgq operator-(Pgq a, const Pgq& b) { return a -= b; }
    friend Pgq operator-(Pgq a) {
        for (auto& v : a.x_) v = -v;
        return a;
    }
    friend Pgq operator*(const F& c, Pgq q) { return q *= c; }

    friend Pgq operator*(const Pgq& a, const Pgq& b) {
        a.check(b);
        const PgqParams& l = a.params_;
        const auto& [a0, a1, a2, a3] = a.x_;
        const auto& [b0, b1, b2, b3] = b.x_;
        F s = a0 * b0;
        sub_scaled(s, a1 * b1, l.l12());
        sub_scaled(s, a2 * b2, l.l13());
        sub_scaled(s, a3 * b3, l.l23());
        F i = a0 * b1;
        i += a1 * b0;
        if (!l.l3().is_zero()) add_scaled(i, a2 * b3 - a3 * b2, l.l3());
        F j = a0 * b2;
        j += a2 * b0;
        if (!l.l2().is_zero()) add_scaled(j, a3 * b1 - a1 * b3, l.l2());
        F k = a0 * b3;
        k += a3 * b0;
        if (!l.l1().is_zero()) add_scaled(k, a1 * b2 - a2 * b1, l.l1());
        return Pgq(std::move(s), std::move(i), std::move(j), std::move(k), l);
    }

    friend bool operator==(const Pgq& a, const Pgq& b) { return a.params_ == b.params_ && a.x_ == b.x_; }

private:
    // acc += c * term and acc -= c * term, skipping the multiplication for c in {0, 1}.
    static void add_scaled(F& acc, F term, const Rational& c) {
        if (c.is_zero()) return;
        if (!c.is_one()) term *= c;
        acc += term;
    }
    static void sub_scaled(F& acc, F term, const Rational& c) {
        if (c.is_zero()) return;
        if (!c.is_one()) term *= c;
        acc -= term;
    }

    void check(const Pgq& o) const {
        if (!(params_ == o.params_)) throw MismatchedParams();
    }

    std::array<F, 4> x_;
    PgqParams params_;
};

template <class F>
Pgq<F> pgq_add(const Pgq<F>& p, const Pgq<F>& q) {
    return p + q;
}

template <class F>
Pgq<F> pgq_sub(const Pgq<F>& p, const Pgq<F>& q) {
    return p - q;
}

template <class F>
Pgq<F> pgq_scale(const F& c, const Pgq<F>& q) {
    return c * q;
}

template <class F>
Pgq<F> pgq_mul(const Pgq<F>& p, const Pgq<F>& q) {
    return p * q;
}

template <class F>
Pgq<F> pgq_conj(const Pgq<F>& q) {
    return Pgq<F>(q[0], -q[1], -q[2], -q[3], q.params());
}

/// x0^2 + l1 l2 x1^2 + l1 l3 x2^2 + l2 l3 x3^2, the scalar part of Q Q^dagger.
template <class F>
F pgq_norm(const Pgq<F>& q) {
    const PgqParams& l = q.params();
    F n = q[0] * q[0];
    n += (q[1] * q[1]) * l.l12();
    n += (q[2] * q[2]) * l.l13();
    n += (q[3] * q[3]) * l.l23();
    return n;
}

/// P Q - Q P.
template <class F>
Pgq<F> pgq_commutator(const Pgq<F>& p, const Pgq<F>& q) {
    return p * q - q * p;
}

/// Coefficientwise change of field, e.g. Rational -> QuadExt.
template <class To, class From>
Pgq<To> pgq_cast(const Pgq<From>& q) {
    return Pgq<To>(To(q[0]), To(q[1]), To(q[2]), To(q[3]), q.params());
}

}  // namespace hq3
