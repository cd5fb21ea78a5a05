#pragma once

/**
 * @file quat_sequences.hpp
 * @brief Higher-order Horadam and generalized Fibonacci quaternion sequences
 *
 *     QW_n(s) = W_n(s) + W_{n+1}(s) i + W_{n+2}(s) j + W_{n+3}(s) k
 *     QU_n(s) = U_n(s) + U_{n+1}(s) i + U_{n+2}(s) j + U_{n+3}(s) k
 *
 * over a 3-parameter generalized quaternion algebra, and two-sided checks of
 * their closed forms.
 *
 * Every *_check / *_sides function keeps the two evaluation routes apart:
 * the left-hand side is built from rational recurrence values and the
 * multiplication table; the right-hand side is evaluated from alpha, beta,
 * A, B and Theta_alpha, Theta_beta in Q(sqrt D). A pass therefore means the
 * two routes agree exactly, coefficient by coefficient.
 */

#include "hq3/horadam.hpp"
#include "hq3/pgq.hpp"
#include "hq3/quad_ext.hpp"
#include "hq3/seq_matrix.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace hq3 {

using QuatQ = Pgq<Rational>;
using QuatK = Pgq<QuadExt>;

class QuatSeqContext {
public:
    /// theta_mix / mixed_bracket are tabulated for d <= bracket_bound (default: max_quat_index()) and
    /// computed on demand beyond it.
    QuatSeqContext(std::shared_ptr<const SequenceBasis> basis, PgqParams lambda,
                   std::optional<std::size_t> bracket_bound = std::nullopt);
    /// Builds its own basis with W_n(s), U_n(s) tables through max_index.
    QuatSeqContext(const HoradamParams& P, std::size_t max_index);

    const SequenceBasis& basis() const { return *basis_; }
    const std::shared_ptr<const SequenceBasis>& basis_ptr() const { return basis_; }
    const HoradamParams& params() const { return params_; }
    const PgqParams& lambda() const { return params_.lambda; }

    const QuadExt& alpha() const { return basis_->alpha(); }
    const QuadExt& beta() const { return basis_->beta(); }
    const QuadExt& A() const { return basis_->A(); }
    const QuadExt& B() const { return basis_->B(); }
    const Rational& Vs() const { return basis_->Vs(); }
    const Rational& qs() const { return basis_->qs(); }
    const Rational& D() const { return basis_->D(); }

    /// 1 + alpha^s i + alpha^{2s} j + alpha^{3s} k, and likewise for beta.
    const QuatK& theta_alpha() const { return theta_a_; }
    const QuatK& theta_beta() const { return theta_b_; }
    /// Theta_alpha Theta_beta by the multiplication table.
    const QuatK& theta_ab() const { return theta_ab_; }
    /// Theta_beta Theta_alpha by the multiplication table.
    const QuatK& theta_ba() const { return theta_ba_; }
    /// lambda_3 (alpha beta)^s i - lambda_2 (alpha^s + beta^s) j + lambda_1 k.
    const QuatK& lambda_vector() const { return lambda_vec_; }
    /// Closed-form [Theta_beta, Theta_alpha] = 2 (alpha beta)^s (alpha^s - beta^s) lambda_vector.
    const QuatK& commutator() const { return commutator_; }

    /// (alpha^{sd} - beta^{sd}) Theta_alpha Theta_beta + alpha^{sd} [Theta_beta, Theta_alpha]: the bracket
    /// shared by the Catalan (d = m) and d'Ocagne (d = n - m) closed forms.
    QuatK theta_mix(std::size_t d) const;
    /// U_d(s) Theta_alpha Theta_beta + 2 alpha^{s(d+1)} beta^s lambda_vector, with U_d(s) from the Binet side;
    /// the bracket of the mixed-product closed form at d = n - m. Throws UndefinedSequence when U_s = 0.
    QuatK mixed_bracket(std::size_t d) const;

    /// Largest n with qw(n) / qu(n) available.
    std::size_t max_quat_index() const;

    const QuatQ& qw_at(std::size_t n) const;
    const QuatQ& qu_at(std::size_t n) const;

private:
    QuatK compute_theta_mix(std::size_t d) const;
    QuatK compute_mixed_bracket(std::size_t d) const;

    std::shared_ptr<const SequenceBasis> basis_;
    HoradamParams params_;
    QuatK theta_a_, theta_b_, theta_ab_, theta_ba_, lambda_vec_, commutator_;
    std::vector<QuatQ> qw_, qu_;
    std::vector<QuatK> theta_mix_, mixed_bracket_;
};

template <class L, class R>
struct Sides {
    L lhs;
    R rhs;
};

using QuatSides = Sides<QuatQ, QuatK>;
using QuatRationalSides = Sides<QuatQ, QuatQ>;
using QuatSeriesSides = Sides<std::vector<QuatQ>, std::vector<QuatK>>;
using QuatMatrixSides = Sides<SeqMatrix2<QuatQ>, SeqMatrix2<QuatQ>>;

/// lhs: pgq_norm(QW_n(s)); rhs: the closed form in Q(sqrt D).
struct NormSides {
    Rational direct;
    QuadExt closed;
};

struct ThetaProducts {
    QuatK ab;
    QuatK ba;
};

/// h_power against the U-entry closed form, with det(H^n) against q^{sn}.
struct HPowerSides {
    SeqMatrix2<Rational> lhs;
    SeqMatrix2<Rational> rhs;
    Rational det;
    Rational det_expected;
};

/// Exact equality of a rational quaternion with one over Q(sqrt D): every
/// right-hand coefficient must be rational and equal.
bool matches(const QuatQ& lhs, const QuatK& rhs);
bool matches(const std::vector<QuatQ>& lhs, const std::vector<QuatK>& rhs);

QuatQ qw(const QuatSeqContext& ctx, std::size_t n);
QuatQ qu(const QuatSeqContext& ctx, std::size_t n);

/// QW_{n+2}(s) against V_s QW_{n+1}(s) - q^s QW_n(s).
QuatRationalSides qw_recurrence_sides(const QuatSeqContext& ctx, std::size_t n);
bool qw_recurrence_check(const QuatSeqContext& ctx, std::size_t n);

NormSides qw_norm_check(const QuatSeqContext& ctx, std::size_t n);

/// (A alpha^{sn} Theta_alpha - B beta^{sn} Theta_beta) / (A alpha^s - B beta^s).
QuatK qw_binet(const QuatSeqContext& ctx, std::size_t n);
/// (alpha^{sn} Theta_alpha - beta^{sn} Theta_beta) / (alpha^s - beta^s).
QuatK qu_binet(const QuatSeqContext& ctx, std::size_t n);

/// Closed forms of Theta_alpha Theta_beta and Theta_beta Theta_alpha.
ThetaProducts theta_products(const QuatSeqContext& ctx);
/// Closed form of [Theta_beta, Theta_alpha].
QuatK theta_commutator(const QuatSeqContext& ctx);
/// 2 q^s (alpha - beta) U_s (lambda_3 q^s i - lambda_2 V_s j + lambda_1 k); alpha - beta is its only irrational factor.
QuatK theta_commutator_rationalized(const QuatSeqContext& ctx);

/// [QW_n]^2 - QW_{n-m} QW_{n+m} against its Theta form; n >= m.
QuatSides catalan_check(const QuatSeqContext& ctx, std::size_t n, std::size_t m);
/// The m = 1 specialization written out on its own; n >= 1.
QuatSides cassini_check(const QuatSeqContext& ctx, std::size_t n);

/// QW_{m+1} QW_n - QW_m QW_{n+1} against its Theta form; n >= m.
QuatSides docagne_check(const QuatSeqContext& ctx, std::size_t n, std::size_t m);
/// m = n: QW_{n+1} QW_n - QW_n QW_{n+1} as a multiple of the commutator.
QuatSides docagne_corollary_check(const QuatSeqContext& ctx, std::size_t n);

/// sum_{r<=n} QW_r(s) against its closed form; throws DegenerateDenominator when q^s - V_s + 1 = 0.
QuatRationalSides qw_sum_check(const QuatSeqContext& ctx, std::size_t n);
/// k-coefficient of the summation correction term in both spellings:
/// (1 - q^s) W_0(s) + (1 + V_s) W_1(s) and W_0(s) + W_1(s) + W_2(s).
std::pair<Rational, Rational> sum_correction_k(const QuatSeqContext& ctx);

/// QW_m QU_n - QU_m QW_n against its Theta form; n >= m.
QuatSides mixed_product_check(const QuatSeqContext& ctx, std::size_t n, std::size_t m);
/// m = n: QW_n QU_n - QU_n QW_n.
QuatSides mixed_product_corollary_check(const QuatSeqContext& ctx, std::size_t n);

/// (sum_{n<=N} QW_n x^n)(1 - V_s x + q^s x^2) against the Theta-form numerator, degrees 0..N-1.
QuatSeriesSides qw_ogf_sides(const QuatSeqContext& ctx, std::size_t N);
bool qw_ogf_check(const QuatSeqContext& ctx, std::size_t N);
QuatSeriesSides qu_ogf_sides(const QuatSeqContext& ctx, std::size_t N);
bool qu_ogf_check(const QuatSeqContext& ctx, std::size_t N);

/// Coefficient of x^n/n! in the exponential generating function: QW_n against
/// (A Theta_alpha (alpha^s)^n - B Theta_beta (beta^s)^n) / (A alpha^s - B beta^s).
QuatSides qw_egf_sides(const QuatSeqContext& ctx, std::size_t n);
bool qw_egf_check(const QuatSeqContext& ctx, std::size_t n);

/// [[V_s, -q^s], [1, 0]].
SeqMatrix2<Rational> h_matrix(const SequenceBasis& b);
/// H(s)^n by square-and-multiply.
SeqMatrix2<Rational> h_power(const SequenceBasis& b, std::uint64_t n);
/// [[U_{n+1}(s), -q^s U_n(s)], [U_n(s), -q^s U_{n-1}(s)]]; n >= 1.
SeqMatrix2<Rational> h_power_closed(const SequenceBasis& b, std::size_t n);
HPowerSides h_power_sides(const SequenceBasis& b, std::size_t n);

/// [[QW_{n+1}, -q^s QW_n], [QW_n, -q^s QW_{n-1}]] against [[QW_2, -q^s QW_1], [QW_1, -q^s QW_0]] H(s)^{n-1}; n >= 1.
/// Rational entries of H(s) are promoted to scalar quaternions.
QuatMatrixSides qw_matrix_sides(const QuatSeqContext& ctx, std::size_t n);
bool qw_matrix_check(const QuatSeqContext& ctx, std::size_t n);

/// QW_{n+m+1} against QW_2 U_{n+m}(s) - q^s QW_1 U_{n+m-1}(s); m >= 1.
QuatRationalSides index_reduction_sum_sides(const QuatSeqContext& ctx, std::size_t n, std::size_t m);
/// QW_{2n} against QW_1 U_{2n}(s) - q^s QW_0 U_{2n-1}(s); n >= 1.
QuatRationalSides index_reduction_double_sides(const QuatSeqContext& ctx, std::size_t n);
/// Both reductions; the second at index n when n >= 1.
bool index_reduction_checks(const QuatSeqContext& ctx, std::size_t n, std::size_t m);

}  // namespace hq3
