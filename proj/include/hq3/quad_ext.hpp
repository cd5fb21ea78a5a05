#pragma once

/**
 * @file quad_ext.hpp
 * @brief Elements a + b*sqrt(D) of the quadratic extension Q(sqrt(D)).
 *
 * D is stored exactly as given (no square-free reduction) and is shared by
 * every value derived from the same parameter set. Arithmetic between values
 * over different D throws MismatchedDiscriminant.
 *
 * A value built from a bare Rational carries no discriminant. It is a
 * rational (b = 0) and adopts the discriminant of whatever it is combined
 * with, which is what lets integer literals appear in generic code.
 *
 * When D is a perfect square of a rational the algebra Q[t]/(t^2 - D) is not
 * a field: nonzero elements with a^2 = D b^2 have no inverse, and inv()
 * throws DivisionByZero for them. Equality is structural on (a, b, D); a
 * number that happens to be rational in that case may have two spellings.
 */

#include "hq3/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

namespace hq3 {

class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT: rationals embed implicitly
    QuadExt(long n) : a_(n) {}                 // NOLINT
    QuadExt(int n) : a_(n) {}                  // NOLINT
    QuadExt(Rational a, Rational b, Rational D);

    /// sqrt(D) itself.
    static QuadExt sqrt_of(const Rational& D);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    /// Discriminant; nullopt for a field-agnostic rational.
    std::optional<Rational> D() const;
    bool has_discriminant() const { return static_cast<bool>(D_); }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    /// The rational value; throws InvalidArgument when b != 0.
    const Rational& as_rational() const;

    /// Re-embeds this value over the discriminant of `like`.
    QuadExt in_field_of(const QuadExt& like) const;

    QuadExt conj() const;
    /// Field norm a^2 - D b^2.
    Rational norm() const;
    /// Trace 2a.
    Rational trace() const;
    QuadExt inv() const;
    QuadExt pow(std::uint64_t e) const;

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator*=(const Rational& c);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(QuadExt x, const Rational& c) { return x *= c; }
    friend QuadExt operator*(const Rational& c, QuadExt x) { return x *= c; }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inv(); }
    friend QuadExt operator-(const QuadExt& x);

    /// Structural equality; values with b = 0 compare as rationals regardless of D.
    friend bool operator==(const QuadExt& x, const QuadExt& y);

    std::string str() const;

private:
    void adopt(const QuadExt& o);

    Rational a_;
    Rational b_;
    std::shared_ptr<const Rational> D_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

QuadExt quad_add(const QuadExt& x, const QuadExt& y);
QuadExt quad_mul(const QuadExt& x, const QuadExt& y);
QuadExt quad_inv(const QuadExt& x);
QuadExt quad_conj(const QuadExt& x);

struct Roots {
    QuadExt alpha;
    QuadExt beta;
    Rational D;
};

/// Roots of x^2 - p x + q in Q(sqrt(p^2 - 4q)): alpha = (p + sqrt D)/2, beta = (p - sqrt D)/2.
Roots embed_roots(const Rational& p, const Rational& q);

}  // namespace hq3
