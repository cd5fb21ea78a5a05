#pragma once

// Reference implementations used only by the tests. They are written
// directly on mpq_class and never call into the library, so agreement with
// the library is evidence rather than tautology.

#include "hq3/pgq.hpp"
#include "hq3/quad_ext.hpp"
#include "hq3/rational.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

inline std::vector<mpq_class> linear(mpq_class x0, mpq_class x1, const mpq_class& p, const mpq_class& q,
                                     std::size_t last) {
    std::vector<mpq_class> t{x0, x1};
    while (t.size() <= last) {
        const std::size_t n = t.size();
        t.push_back(p * t[n - 1] - q * t[n - 2]);
    }
    t.resize(last + 1);
    return t;
}

/// W_{sn}/W_s for n = 0..last.
inline std::vector<mpq_class> higher(const mpq_class& p, const mpq_class& q, const mpq_class& w0, const mpq_class& w1,
                                     int s, std::size_t last) {
    const auto w = linear(w0, w1, p, q, static_cast<std::size_t>(s) * last + 1);
    std::vector<mpq_class> out;
    for (std::size_t n = 0; n <= last; ++n) out.push_back(mpq_class(w[s * n] / w[s]));
    return out;
}

/// a + b sqrt(D) with schoolbook arithmetic.
struct Quad {
    mpq_class a, b, D;

    friend Quad operator+(const Quad& x, const Quad& y) { return {x.a + y.a, x.b + y.b, x.D}; }
    friend Quad operator-(const Quad& x, const Quad& y) { return {x.a - y.a, x.b - y.b, x.D}; }
    friend Quad operator*(const Quad& x, const Quad& y) {
        return {x.a * y.a + x.D * x.b * y.b, x.a * y.b + x.b * y.a, x.D};
    }
    Quad pow(unsigned e) const {
        Quad r{1, 0, D};
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }
};

inline bool same(const hq3::QuadExt& lib, const Quad& ref) {
    return lib.a().raw() == ref.a && lib.b().raw() == ref.b;
}

inline bool same(const hq3::Rational& lib, const mpq_class& ref) { return lib.raw() == ref; }

inline hq3::Rational lib(const mpq_class& x) { return hq3::Rational(x); }

/// Quaternion over mpq by structure constants: e_r e_c = coef * e_idx.
struct Quat {
    std::array<mpq_class, 4> x;
};

inline Quat mul(const Quat& P, const Quat& Q, const mpq_class& l1, const mpq_class& l2, const mpq_class& l3) {
    struct Entry {
        mpq_class coef;
        int idx;
    };
    // Rows and columns ordered 1, i, j, k.
    const Entry table[4][4] = {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
        {{1, 1}, {-l1 * l2, 0}, {l1, 3}, {-l2, 2}},
        {{1, 2}, {-l1, 3}, {-l1 * l3, 0}, {l3, 1}},
        {{1, 3}, {l2, 2}, {-l3, 1}, {-l2 * l3, 0}},
    };
    Quat out{{0, 0, 0, 0}};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const Entry& e = table[r][c];
            out.x[e.idx] += e.coef * P.x[r] * Q.x[c];
        }
    }
    return out;
}

inline bool same(const hq3::Pgq<hq3::Rational>& lib, const Quat& ref) {
    for (std::size_t r = 0; r < 4; ++r) {
        if (lib[r].raw() != ref.x[r]) return false;
    }
    return true;
}

/// Deterministic source of small random rationals and quaternions.
class Random {
public:
    explicit Random(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    hq3::Rational rational(long span = 9, long max_den = 6) {
        return hq3::Rational(integer(-span, span), integer(1, max_den));
    }

    hq3::Rational nonzero_rational(long span = 9, long max_den = 6) {
        for (;;) {
            hq3::Rational r = rational(span, max_den);
            if (!r.is_zero()) return r;
        }
    }

    hq3::Pgq<hq3::Rational> quat(const hq3::PgqParams& l) {
        return {rational(), rational(), rational(), rational(), l};
    }

    hq3::PgqParams lambda() { return {rational(3, 3), rational(3, 3), rational(3, 3)}; }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
