#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers.
 *
 * Thin value type over GMP's mpq_class. Every value is kept canonical:
 * positive denominator, numerator and denominator coprime, zero as 0/1.
 * Text form is "n" for integers and "n/d" otherwise; parse() accepts
 * "n", "-n", "n/d" and "-n/d" in base 10.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hq3 {

class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT: integers embed implicitly
    Rational(int n) : v_(static_cast<long>(n)) {}  // NOLINT
    Rational(long n, long d);
    explicit Rational(mpq_class v);

    static Rational parse(std::string_view text);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const;
    Rational pow(std::uint64_t e) const;
    Rational abs() const;

    // Display only; never used by the verification paths.
    double to_double() const { return v_.get_d(); }
    std::string str() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hq3
