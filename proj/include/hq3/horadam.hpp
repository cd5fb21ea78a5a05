#pragma once

/**
 * @file horadam.hpp
 * @brief Horadam sequences W_n, their Lucas and Fibonacci companions V_n and
 *        U_n, and the higher-order sequences W_n(s) = W_{sn}/W_s and
 *        U_n(s) = U_{sn}/U_s.
 *
 * All sequences share the characteristic polynomial x^2 - p x + q with roots
 * alpha, beta (alpha + beta = p, alpha beta = q). The higher-order sequences
 * obey W_{n+2}(s) = V_s W_{n+1}(s) - q^s W_n(s) with W_0(s) = W_0/W_s and
 * W_1(s) = 1.
 */

#include "hq3/pgq.hpp"
#include "hq3/quad_ext.hpp"
#include "hq3/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hq3 {

struct HoradamParams {
    Rational p;
    Rational q;
    Rational W0;
    Rational W1;
    int s = 1;
    PgqParams lambda;

    /// Throws ZeroRoot (q = 0), DegenerateRoots (p^2 = 4q) or InvalidArgument (s < 1).
    HoradamParams(Rational p, Rational q, Rational W0, Rational W1, int s = 1, PgqParams lambda = {});

    Rational discriminant() const { return p * p - Rational(4) * q; }
    HoradamParams with_lambda(PgqParams l) const;
    HoradamParams with_s(int s) const;

    std::string str() const;
};

/// Names the violated root hypothesis for (p, q), or nullopt when the roots are distinct and nonzero.
std::optional<std::string> root_degeneracy(const Rational& p, const Rational& q);

// Fresh O(n) evaluations by recurrence. No caching.
Rational horadam_w(const HoradamParams& P, std::size_t n);
Rational lucas_v(const HoradamParams& P, std::size_t n);
Rational fib_u(const HoradamParams& P, std::size_t n);

/// W_{sn}/W_s; throws UndefinedSequence when W_s = 0.
Rational higher_w_ratio(const HoradamParams& P, std::size_t n);
/// Recurrence route for W_n(s); throws UndefinedSequence when W_s = 0.
Rational higher_w_rec(const HoradamParams& P, std::size_t n);
/// U_{sn}/U_s; throws UndefinedSequence when U_s = 0.
Rational higher_u(const HoradamParams& P, std::size_t n);
/// W_1^2 - p W_0 W_1 + q W_0^2.
Rational ab_product(const HoradamParams& P);
/// W_0 (alpha - beta) / (A alpha^s - B beta^s) evaluated in Q(sqrt D).
QuadExt w0s_literal(const HoradamParams& P);

/**
 * Lazily memoized sequence tables for one parameter set.
 *
 * Not thread-safe: confine an instance to one task. Values always agree
 * with the fresh functions above.
 */
class SeqCache {
public:
    explicit SeqCache(HoradamParams P);

    const HoradamParams& params() const { return P_; }

    const Rational& w(std::size_t n);
    const Rational& u(std::size_t n);
    const Rational& v(std::size_t n);
    /// W_n(s) by recurrence.
    const Rational& ws(std::size_t n);
    /// U_n(s) by recurrence.
    const Rational& us(std::size_t n);

private:
    static const Rational& extend(std::vector<Rational>& t, std::size_t n, const Rational& c1, const Rational& c2);

    HoradamParams P_;
    std::vector<Rational> w_, u_, v_, ws_, us_;
    std::optional<Rational> Vs_, qs_;
};

/**
 * Immutable, lambda-independent data for one (p, q, W_0, W_1, s): sequence
 * tables up to a fixed bound plus the Binet-side quantities in Q(sqrt D).
 *
 * Construction never fails on W_s = 0 or U_s = 0; those are exposed as
 * flags, and accessors of the affected tables throw UndefinedSequence.
 */
class SequenceBasis {
public:
    /// Tables W_n(s), U_n(s) cover 0 <= n <= max_index.
    SequenceBasis(const HoradamParams& P, std::size_t max_index);

    const HoradamParams& params() const { return P_; }
    std::size_t max_index() const { return max_index_; }
    int s() const { return P_.s; }

    const Rational& Vs() const { return Vs_; }
    const Rational& qs() const { return qs_; }
    const Rational& D() const { return roots_.D; }

    bool ws_zero() const { return ws_zero_; }
    bool us_zero() const { return us_zero_; }
    /// q^s - V_s + 1 = 0.
    bool sum_den_zero() const { return sum_den_zero_; }

    /// W_n(s) by recurrence (the evaluation route for every identity left-hand side).
    const Rational& ws(std::size_t n) const;
    /// W_{sn}/W_s.
    const Rational& ws_ratio(std::size_t n) const;
    /// U_n(s) by recurrence.
    const Rational& us(std::size_t n) const;
    /// U_{sn}/U_s.
    const Rational& us_ratio(std::size_t n) const;
    /// W_k, U_k for 0 <= k <= s * max_index + 3.
    const Rational& w(std::size_t k) const;
    const Rational& u(std::size_t k) const;
    /// V_k for 0 <= k <= 3s.
    const Rational& v(std::size_t k) const;
    const Rational& w0s() const { return ws(0); }

    const QuadExt& alpha() const { return roots_.alpha; }
    const QuadExt& beta() const { return roots_.beta; }
    /// W_1 - W_0 beta.
    const QuadExt& A() const { return A_; }
    /// W_1 - W_0 alpha.
    const QuadExt& B() const { return B_; }
    /// alpha^{sk}, beta^{sk} for 0 <= k <= max_index + 6.
    const QuadExt& apow(std::size_t k) const;
    const QuadExt& bpow(std::size_t k) const;
    /// A alpha^s - B beta^s.
    const QuadExt& den_w() const { return den_w_; }
    /// alpha^s - beta^s.
    const QuadExt& den_u() const { return den_u_; }
    /// alpha - beta = sqrt(D).
    const QuadExt& root_gap() const { return root_gap_; }
    /// (alpha beta)^{sk} = alpha^{sk} beta^{sk} and alpha^{sk} - beta^{sk}, same range as apow.
    const QuadExt& abpow(std::size_t k) const;
    const QuadExt& pow_gap(std::size_t k) const;
    /// 1 / (A alpha^s - B beta^s) and A B / (A alpha^s - B beta^s)^2; throw UndefinedSequence when W_s = 0.
    const QuadExt& inv_den_w() const;
    const QuadExt& ab_over_den_w2() const;
    /// 1 / (alpha^s - beta^s); throws UndefinedSequence when U_s = 0.
    const QuadExt& inv_den_u() const;

private:
    HoradamParams P_;
    std::size_t max_index_;
    Roots roots_;
    Rational Vs_, qs_;
    bool ws_zero_, us_zero_, sum_den_zero_;
    std::vector<Rational> w_, u_, v_, ws_, ws_ratio_, us_, us_ratio_;
    QuadExt A_, B_, den_w_, den_u_, root_gap_, inv_den_w_, ab_over_den_w2_, inv_den_u_;
    std::vector<QuadExt> apow_, bpow_, abpow_, pow_gap_;
};

/// Both sides of a scalar identity. rhs is the manifestly rational
/// evaluation; rhs_binet, when present, is the same right-hand side
/// evaluated from alpha, beta in Q(sqrt D).
struct ScalarSides {
    Rational lhs;
    Rational rhs;
    std::optional<QuadExt> rhs_binet;

    bool holds() const { return lhs == rhs && (!rhs_binet || *rhs_binet == QuadExt(rhs)); }
};

/// Coefficient lists of two truncated power series.
struct SeriesSides {
    std::vector<Rational> lhs;
    std::vector<Rational> rhs;

    bool holds() const { return lhs == rhs; }
};

// Dual-oracle comparisons of the sequence definitions.
/// lhs = W_{sn}/W_s, rhs = recurrence value W_n(s),
/// rhs_binet = (A alpha^{sn} - B beta^{sn}) / (A alpha^s - B beta^s).
ScalarSides definition_sides_w(const SequenceBasis& b, std::size_t n);
/// The recurrence with its initial conditions, checked on ratio values:
/// n = 0 compares W_0/W_s with the literal W_0 (alpha - beta)/(A alpha^s - B beta^s),
/// n = 1 compares W_1(s) with 1, n >= 2 compares W_n(s) with V_s W_{n-1}(s) - q^s W_{n-2}(s).
ScalarSides recurrence_sides_w(const SequenceBasis& b, std::size_t n);
/// lhs = U_{sn}/U_s, rhs = recurrence value U_n(s), rhs_binet = (alpha^{sn} - beta^{sn}) / (alpha^s - beta^s).
ScalarSides definition_sides_u(const SequenceBasis& b, std::size_t n);
/// ab_product against A*B in Q(sqrt D).
ScalarSides ab_sides(const SequenceBasis& b);

// The classical quadratic identities, W and U forms.
ScalarSides scalar_cassini_w(const SequenceBasis& b, std::size_t n);
ScalarSides scalar_catalan_w(const SequenceBasis& b, std::size_t n, std::size_t m);
ScalarSides scalar_docagne_w(const SequenceBasis& b, std::size_t n, std::size_t m);
ScalarSides scalar_cassini_u(const SequenceBasis& b, std::size_t n);
ScalarSides scalar_catalan_u(const SequenceBasis& b, std::size_t n, std::size_t m);
ScalarSides scalar_docagne_u(const SequenceBasis& b, std::size_t n, std::size_t m);

/// Partial sum of W_r(s) against its closed form; throws DegenerateDenominator when q^s - V_s + 1 = 0.
ScalarSides scalar_sum_w(const SequenceBasis& b, std::size_t n);

/// (sum_{n<=N} W_n(s) x^n)(1 - V_s x + q^s x^2) against W_0(s) + (W_1(s) - V_s W_0(s)) x, degrees 0..N-1.
SeriesSides scalar_ogf_sides(const SequenceBasis& b, std::size_t N);
bool scalar_ogf_check(const SequenceBasis& b, std::size_t N);

/// W_n(s) against W_0(s) U_{n+1}(s) + (1 - V_s W_0(s)) U_n(s).
ScalarSides scalar_decompose_sides(const SequenceBasis& b, std::size_t n);
bool scalar_decompose_check(const SequenceBasis& b, std::size_t n);

// Convenience overloads building a basis large enough for the request.
ScalarSides scalar_catalan_w(const HoradamParams& P, std::size_t n, std::size_t m);
ScalarSides scalar_docagne_w(const HoradamParams& P, std::size_t n, std::size_t m);
ScalarSides scalar_sum_w(const HoradamParams& P, std::size_t n);
bool scalar_ogf_check(const HoradamParams& P, std::size_t N);
bool scalar_decompose_check(const HoradamParams& P, std::size_t n);

}  // namespace hq3
