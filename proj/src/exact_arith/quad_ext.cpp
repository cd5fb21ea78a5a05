#include "hq3/quad_ext.hpp"

#include "hq3/errors.hpp"

#include <ostream>

namespace hq3 {

QuadExt::QuadExt(Rational a, Rational b, Rational D)
    : a_(std::move(a)), b_(std::move(b)), D_(std::make_shared<const Rational>(std::move(D))) {
    if (D_->is_zero()) throw InvalidArgument("quadratic extension needs D != 0");
}

QuadExt QuadExt::sqrt_of(const Rational& D) { return QuadExt(Rational(0), Rational(1), D); }

std::optional<Rational> QuadExt::D() const {
    if (!D_) return std::nullopt;
    return *D_;
}

const Rational& QuadExt::as_rational() const {
    if (!is_rational()) throw InvalidArgument("value " + str() + " is not rational");
    return a_;
}

QuadExt QuadExt::in_field_of(const QuadExt& like) const {
    QuadExt r = *this;
    r.adopt(like);
    return r;
}

void QuadExt::adopt(const QuadExt& o) {
    if (!o.D_) return;
    if (!D_) {
        D_ = o.D_;
        return;
    }
    if (D_ != o.D_ && !(*D_ == *o.D_)) throw MismatchedDiscriminant();
}

QuadExt QuadExt::conj() const {
    QuadExt r = *this;
    r.b_ = -b_;
    return r;
}

Rational QuadExt::norm() const {
    if (b_.is_zero()) return a_ * a_;
    return a_ * a_ - *D_ * b_ * b_;
}

Rational QuadExt::trace() const { return a_ + a_; }

QuadExt QuadExt::inv() const {
    const Rational n = norm();
    if (n.is_zero()) throw DivisionByZero();
    const Rational s = n.inverse();
    QuadExt r = conj();
    r.a_ *= s;
    r.b_ *= s;
    return r;
}

QuadExt QuadExt::pow(std::uint64_t e) const {
    QuadExt result = QuadExt(1).in_field_of(*this);
    QuadExt base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    adopt(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    adopt(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    *this = *this * o;
    return *this;
}

QuadExt& QuadExt::operator*=(const Rational& c) {
    a_ *= c;
    b_ *= c;
    return *this;
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    QuadExt r;
    r.D_ = x.D_;
    r.adopt(y);
    if (y.b_.is_zero()) {
        r.a_ = x.a_ * y.a_;
        r.b_ = x.b_ * y.a_;
    } else if (x.b_.is_zero()) {
        r.a_ = x.a_ * y.a_;
        r.b_ = x.a_ * y.b_;
    } else {
        r.a_ = x.a_ * y.a_;
        r.a_ += *r.D_ * (x.b_ * y.b_);
        r.b_ = x.a_ * y.b_;
        r.b_ += x.b_ * y.a_;
    }
    return r;
}

QuadExt operator-(const QuadExt& x) {
    QuadExt r = x;
    r.a_ = -x.a_;
    r.b_ = -x.b_;
    return r;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    if (x.b_.is_zero()) return true;
    return x.D_ == y.D_ || *x.D_ == *y.D_;
}

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    return a_.str() + (b_.sign() < 0 ? " - " : " + ") + b_.abs().str() + "*sqrt(" + D_->str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

QuadExt quad_add(const QuadExt& x, const QuadExt& y) { return x + y; }
QuadExt quad_mul(const QuadExt& x, const QuadExt& y) { return x * y; }
QuadExt quad_inv(const QuadExt& x) { return x.inv(); }
QuadExt quad_conj(const QuadExt& x) { return x.conj(); }

Roots embed_roots(const Rational& p, const Rational& q) {
    if (q.is_zero()) throw ZeroRoot();
    Rational D = p * p - Rational(4) * q;
    if (D.is_zero()) throw DegenerateRoots();
    const Rational half(1, 2);
    const Rational mid = p * half;
    QuadExt alpha(mid, half, D);
    QuadExt beta = alpha.conj();
    return Roots{std::move(alpha), std::move(beta), std::move(D)};
}

}  // namespace hq3
