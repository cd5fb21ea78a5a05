#pragma once

#include <array>
#include <cstdint>

namespace hq3 {

/// 2x2 matrix over a ring T (Rational or a quaternion type).
template <class T>
struct SeqMatrix2 {
    std::array<std::array<T, 2>, 2> m;

    const T& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
    T& operator()(std::size_t r, std::size_t c) { return m[r][c]; }

    friend SeqMatrix2 operator*(const SeqMatrix2& x, const SeqMatrix2& y) {
        return SeqMatrix2{{{{x.m[0][0] * y.m[0][0] + x.m[0][1] * y.m[1][0], x.m[0][0] * y.m[0][1] + x.m[0][1] * y.m[1][1]},
                            {x.m[1][0] * y.m[0][0] + x.m[1][1] * y.m[1][0], x.m[1][0] * y.m[0][1] + x.m[1][1] * y.m[1][1]}}}};
    }

    friend bool operator==(const SeqMatrix2& x, const SeqMatrix2& y) { return x.m == y.m; }
};

template <class T>
SeqMatrix2<T> identity_matrix(const T& one, const T& zero) {
    return SeqMatrix2<T>{{{{one, zero}, {zero, one}}}};
}

/// Square-and-multiply; exponent 0 gives the identity.
template <class T>
SeqMatrix2<T> matrix_pow(SeqMatrix2<T> base, std::uint64_t e, const T& one, const T& zero) {
    SeqMatrix2<T> result = identity_matrix(one, zero);
    while (e != 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

/// Only meaningful for commutative T.
template <class T>
T determinant(const SeqMatrix2<T>& x) {
    return x.m[0][0] * x.m[1][1] - x.m[0][1] * x.m[1][0];
}

}  // namespace hq3
