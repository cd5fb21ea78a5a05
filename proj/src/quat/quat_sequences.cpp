#include "hq3/quat_sequences.hpp"

#include "hq3/errors.hpp"

#include <algorithm>

namespace hq3 {

namespace {

QuatK theta_of(const SequenceBasis& b, bool use_alpha, const PgqParams& l) {
    auto pw = [&](std::size_t k) -> const QuadExt& { return use_alpha ? b.apow(k) : b.bpow(k); };
    return QuatK(pw(0), pw(1), pw(2), pw(3), l);
}

QuatK lambda_vector_of(const SequenceBasis& b, const PgqParams& l) {
    const QuadExt ab = b.apow(1) * b.bpow(1);
    const QuadExt sum = b.apow(1) + b.bpow(1);
    const QuadExt zero = ab - ab;
    return QuatK(zero, ab * l.l3(), -(sum * l.l2()), QuadExt(l.l1()).in_field_of(ab), l);
}

QuatK commutator_of(const SequenceBasis& b, const QuatK& lambda_vec) {
    const QuadExt ab = b.apow(1) * b.bpow(1);
    const QuadExt c = ab * (b.apow(1) - b.bpow(1)) * Rational(2);
    return c * lambda_vec;
}

QuatK to_k(const QuatQ& q) { return pgq_cast<QuadExt>(q); }

// (alpha beta)^{sk} through the Binet route.
QuadExt ab_pow(const SequenceBasis& b, std::size_t k) { return b.apow(k) * b.bpow(k); }

void require_order(std::size_t n, std::size_t m) {
    if (m > n) throw InvalidArgument("index pair needs n >= m");
}

}  // namespace

QuatSeqContext::QuatSeqContext(std::shared_ptr<const SequenceBasis> basis, PgqParams lambda,
                               std::optional<std::size_t> bracket_bound)
    : basis_(std::move(basis)),
      params_(basis_->params().with_lambda(lambda)),
      theta_a_(theta_of(*basis_, true, lambda)),
      theta_b_(theta_of(*basis_, false, lambda)),
      theta_ab_(theta_a_ * theta_b_),
      theta_ba_(theta_b_ * theta_a_),
      lambda_vec_(lambda_vector_of(*basis_, lambda)),
      commutator_(commutator_of(*basis_, lambda_vec_)) {
    const std::size_t K = basis_->max_index();
    if (K < 3) return;
    if (!basis_->ws_zero()) {
        qw_.reserve(K - 2);
        for (std::size_t n = 0; n + 3 <= K; ++n) {
            qw_.emplace_back(basis_->ws(n), basis_->ws(n + 1), basis_->ws(n + 2), basis_->ws(n + 3), lambda);
        }
    }
    if (!basis_->us_zero()) {
        qu_.reserve(K - 2);
        for (std::size_t n = 0; n + 3 <= K; ++n) {
            qu_.emplace_back(basis_->us(n), basis_->us(n + 1), basis_->us(n + 2), basis_->us(n + 3), lambda);
        }
    }
    const std::size_t D = std::min(K - 3, bracket_bound.value_or(K - 3));
    theta_mix_.reserve(D + 1);
    for (std::size_t d = 0; d <= D; ++d) theta_mix_.push_back(compute_theta_mix(d));
    if (!basis_->us_zero()) {
        mixed_bracket_.reserve(D + 1);
        for (std::size_t d = 0; d <= D; ++d) mixed_bracket_.push_back(compute_mixed_bracket(d));
    }
}

QuatK QuatSeqContext::compute_theta_mix(std::size_t d) const {
    const SequenceBasis& b = *basis_;
    return b.pow_gap(d) * theta_ab_ + b.apow(d) * commutator_;
}

QuatK QuatSeqContext::compute_mixed_bracket(std::size_t d) const {
    const SequenceBasis& b = *basis_;
    const QuadExt u_d = b.pow_gap(d) * b.inv_den_u();
    const QuadExt twist = b.apow(d + 1) * b.bpow(1) * Rational(2);
    return u_d * theta_ab_ + twist * lambda_vec_;
}

QuatK QuatSeqContext::theta_mix(std::size_t d) const {
    return d < theta_mix_.size() ? theta_mix_[d] : compute_theta_mix(d);
}

QuatK QuatSeqContext::mixed_bracket(std::size_t d) const {
    if (basis_->us_zero()) throw UndefinedSequence("U_s = 0");
    return d < mixed_bracket_.size() ? mixed_bracket_[d] : compute_mixed_bracket(d);
}

QuatSeqContext::QuatSeqContext(const HoradamParams& P, std::size_t max_index)
    : QuatSeqContext(std::make_shared<const SequenceBasis>(P, max_index), P.lambda) {}

std::size_t QuatSeqContext::max_quat_index() const {
    const std::size_t K = basis_->max_index();
    return K < 3 ? 0 : K - 3;
}

const QuatQ& QuatSeqContext::qw_at(std::size_t n) const {
    if (basis_->ws_zero()) throw UndefinedSequence("W_s = 0");
    if (n >= qw_.size()) throw InvalidArgument("QW index beyond table bound");
    return qw_[n];
}

const QuatQ& QuatSeqContext::qu_at(std::size_t n) const {
    if (basis_->us_zero()) throw UndefinedSequence("U_s = 0");
    if (n >= qu_.size()) throw InvalidArgument("QU index beyond table bound");
    return qu_[n];
}

bool matches(const QuatQ& lhs, const QuatK& rhs) {
    if (!(lhs.params() == rhs.params())) return false;
    for (std::size_t r = 0; r < 4; ++r) {
        if (!rhs[r].is_rational() || !(rhs[r].a() == lhs[r])) return false;
    }
    return true;
}

bool matches(const std::vector<QuatQ>& lhs, const std::vector<QuatK>& rhs) {
    if (lhs.size() != rhs.size()) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (!matches(lhs[i], rhs[i])) return false;
    }
    return true;
}

QuatQ qw(const QuatSeqContext& ctx, std::size_t n) { return ctx.qw_at(n); }
QuatQ qu(const QuatSeqContext& ctx, std::size_t n) { return ctx.qu_at(n); }

QuatRationalSides qw_recurrence_sides(const QuatSeqContext& ctx, std::size_t n) {
    return {ctx.qw_at(n + 2), ctx.Vs() * ctx.qw_at(n + 1) - ctx.qs() * ctx.qw_at(n)};
}

bool qw_recurrence_check(const QuatSeqContext& ctx, std::size_t n) {
    const auto s = qw_recurrence_sides(ctx, n);
    return s.lhs == s.rhs;
}

NormSides qw_norm_check(const QuatSeqContext& ctx, std::size_t n) {
    const SequenceBasis& b = ctx.basis();
    const PgqParams& l = ctx.lambda();
    auto phi = [&](const QuadExt& x) {
        // 1 + l1 l2 x + l1 l3 x^2 + l2 l3 x^3, with x = alpha^{2s}, beta^{2s} or (alpha beta)^s
        const QuadExt x2 = x * x;
        return QuadExt(1).in_field_of(x) + x * l.l12() + x2 * l.l13() + x2 * x * l.l23();
    };
    const QuadExt phi_a = phi(b.apow(2));
    const QuadExt phi_b = phi(b.bpow(2));
    const QuadExt phi_ab = phi(ab_pow(b, 1));
    const QuadExt& A = b.A();
    const QuadExt& B = b.B();
    QuadExt num = A * A * b.apow(2 * n) * phi_a;
    num -= A * B * ab_pow(b, n) * phi_ab * Rational(2);
    num += B * B * b.bpow(2 * n) * phi_b;
    return {pgq_norm(ctx.qw_at(n)), num / (b.den_w() * b.den_w())};
}

QuatK qw_binet(const QuatSeqContext& ctx, std::size_t n) {
    const SequenceBasis& b = ctx.basis();
    if (b.ws_zero()) throw UndefinedSequence("W_s = 0");
    QuatK x = (b.A() * b.apow(n)) * ctx.theta_alpha() - (b.B() * b.bpow(n)) * ctx.theta_beta();
    return b.den_w().inv() * x;
}

QuatK qu_binet(const QuatSeqContext& ctx, std::size_t n) {
    const SequenceBasis& b = ctx.basis();
    if (b.us_zero()) throw UndefinedSequence("U_s = 0");
    QuatK x = b.apow(n) * ctx.theta_alpha() - b.bpow(n) * ctx.theta_beta();
    return b.den_u().inv() * x;
}

ThetaProducts theta_products(const QuatSeqContext& ctx) {
    const SequenceBasis& b = ctx.basis();
    const PgqParams& l = ctx.lambda();
    const QuadExt ab = ab_pow(b, 1);
    const QuadExt ab2 = ab * ab;
    // The cube term of the k-coefficient is alpha^{3s} + beta^{3s}.
    QuadExt scalar = QuadExt(1).in_field_of(ab) - ab * l.l12() - ab2 * l.l13() - ab2 * ab * l.l23();
    const QuatK symmetric(std::move(scalar), b.apow(1) + b.bpow(1), b.apow(2) + b.bpow(2), b.apow(3) + b.bpow(3), l);
    const QuatK skew = (ab * (b.apow(1) - b.bpow(1))) * ctx.lambda_vector();
    return {symmetric - skew, symmetric + skew};
}

QuatK theta_commutator(const QuatSeqContext& ctx) { return ctx.commutator(); }

QuatK theta_commutator_rationalized(const QuatSeqContext& ctx) {
    const SequenceBasis& b = ctx.basis();
    const PgqParams& l = ctx.lambda();
    const auto s = static_cast<std::size_t>(b.s());
    const QuatK v = to_k(QuatQ(Rational(0), l.l3() * b.qs(), -(l.l2() * b.Vs()), l.l1(), l));
    return (b.root_gap() * (Rational(2) * b.qs() * b.u(s))) * v;
}

QuatSides catalan_check(const QuatSeqContext& ctx, std::size_t n, std::size_t m) {
    require_order(n, m);
    const SequenceBasis& b = ctx.basis();
    QuatQ lhs = ctx.qw_at(n) * ctx.qw_at(n) - ctx.qw_at(n - m) * ctx.qw_at(n + m);
    const QuadExt pref = b.ab_over_den_w2() * b.abpow(n - m) * b.pow_gap(m);
    return {std::move(lhs), pref * ctx.theta_mix(m)};
}

QuatSides cassini_check(const QuatSeqContext& ctx, std::size_t n) {
    if (n < 1) throw InvalidArgument("Cassini needs n >= 1");
    const SequenceBasis& b = ctx.basis();
    QuatQ lhs = ctx.qw_at(n) * ctx.qw_at(n) - ctx.qw_at(n - 1) * ctx.qw_at(n + 1);
    // Written out from Theta_alpha Theta_beta and the commutator rather than through theta_mix(1).
    const QuadExt gap = b.apow(1) - b.bpow(1);
    const QuadExt pref = b.A() * b.B() * ab_pow(b, n - 1) * gap / (b.den_w() * b.den_w());
    QuatK rhs = pref * (gap * ctx.theta_ab() + b.apow(1) * ctx.commutator());
    return {std::move(lhs), std::move(rhs)};
}

QuatSides docagne_check(const QuatSeqContext& ctx, std::size_t n, std::size_t m) {
    require_order(n, m);
    const SequenceBasis& b = ctx.basis();
    QuatQ lhs = ctx.qw_at(m + 1) * ctx.qw_at(n) - ctx.qw_at(m) * ctx.qw_at(n + 1);
    const QuadExt pref = b.ab_over_den_w2() * b.abpow(m) * b.pow_gap(1);
    return {std::move(lhs), pref * ctx.theta_mix(n - m)};
}

QuatSides docagne_corollary_check(const QuatSeqContext& ctx, std::size_t n) {
    const SequenceBasis& b = ctx.basis();
    QuatQ lhs = ctx.qw_at(n + 1) * ctx.qw_at(n) - ctx.qw_at(n) * ctx.qw_at(n + 1);
    const QuadExt pref = b.A() * b.B() * ab_pow(b, n) * (b.apow(1) - b.bpow(1)) / (b.den_w() * b.den_w());
    return {std::move(lhs), pref * ctx.commutator()};
}

QuatRationalSides qw_sum_check(const QuatSeqContext& ctx, std::size_t n) {
    const SequenceBasis& b = ctx.basis();
    if (b.sum_den_zero()) throw DegenerateDenominator("q^s - V_s + 1 = 0");
    const PgqParams& l = ctx.lambda();
    QuatQ lhs = QuatQ::zero_like(ctx.qw_at(0));
    for (std::size_t r = 0; r <= n; ++r) lhs += ctx.qw_at(r);

    const Rational& w0 = b.ws(0);
    const Rational& w1 = b.ws(1);
    const Rational one(1);
    const Rational sigma = w1 + (one - b.Vs()) * w0;
    const QuatQ Pi(one, one, one, one, l);
    const QuatQ Phi(Rational(0), w0, w0 + w1, (one - b.qs()) * w0 + (one + b.Vs()) * w1, l);
    const Rational inv_den = (b.qs() - b.Vs() + one).inverse();
    QuatQ rhs = inv_den * (b.qs() * ctx.qw_at(n) - ctx.qw_at(n + 1) + sigma * Pi) - Phi;
    return {std::move(lhs), std::move(rhs)};
}

std::pair<Rational, Rational> sum_correction_k(const QuatSeqContext& ctx) {
    const SequenceBasis& b = ctx.basis();
    const Rational one(1);
    return {(one - b.qs()) * b.ws(0) + (one + b.Vs()) * b.ws(1), b.ws(0) + b.ws(1) + b.ws(2)};
}

QuatSides mixed_product_check(const QuatSeqContext& ctx, std::size_t n, std::size_t m) {
    require_order(n, m);
    const SequenceBasis& b = ctx.basis();
    QuatQ lhs = ctx.qw_at(m) * ctx.qu_at(n) - ctx.qu_at(m) * ctx.qw_at(n);
    const QuadExt pref = b.root_gap() * b.params().W0 * b.abpow(m) * b.inv_den_w();
    return {std::move(lhs), pref * ctx.mixed_bracket(n - m)};
}

QuatSides mixed_product_corollary_check(const QuatSeqContext& ctx, std::size_t n) {
    const SequenceBasis& b = ctx.basis();
    if (b.us_zero()) throw UndefinedSequence("U_s = 0");
    QuatQ lhs = ctx.qw_at(n) * ctx.qu_at(n) - ctx.qu_at(n) * ctx.qw_at(n);
    const QuadExt pref = b.root_gap() * b.params().W0 * ab_pow(b, n + 1) * Rational(2) / b.den_w();
    return {std::move(lhs), pref * ctx.lambda_vector()};
}

namespace {

std::vector<QuatQ> series_times_denominator(const QuatSeqContext& ctx, std::size_t N, bool use_w) {
    const Rational den[3] = {Rational(1), -ctx.Vs(), ctx.qs()};
    const QuatQ& first = use_w ? ctx.qw_at(0) : ctx.qu_at(0);
    std::vector<QuatQ> out(N, QuatQ::zero_like(first));
    for (std::size_t n = 0; n <= N; ++n) {
        const QuatQ& term = use_w ? ctx.qw_at(n) : ctx.qu_at(n);
        for (std::size_t d = 0; d < 3; ++d) {
            if (n + d < N) out[n + d] += den[d] * term;
        }
    }
    return out;
}

std::vector<QuatK> padded_numerator(QuatK c0, QuatK c1, std::size_t N) {
    std::vector<QuatK> out;
    out.reserve(N);
    const QuatK zero = QuatK::zero_like(c0);
    for (std::size_t d = 0; d < N; ++d) out.push_back(d == 0 ? c0 : (d == 1 ? c1 : zero));
    return out;
}

}  // namespace

QuatSeriesSides qw_ogf_sides(const QuatSeqContext& ctx, std::size_t N) {
    const SequenceBasis& b = ctx.basis();
    if (b.ws_zero()) throw UndefinedSequence("W_s = 0");
    const QuadExt inv = b.den_w().inv();
    const QuatK& Ta = ctx.theta_alpha();
    const QuatK& Tb = ctx.theta_beta();
    QuatK c0 = inv * (b.A() * Ta - b.B() * Tb);
    QuatK c1 = -(inv * ((b.A() * b.bpow(1)) * Ta - (b.B() * b.apow(1)) * Tb));
    return {series_times_denominator(ctx, N, true), padded_numerator(std::move(c0), std::move(c1), N)};
}

bool qw_ogf_check(const QuatSeqContext& ctx, std::size_t N) {
    const auto s = qw_ogf_sides(ctx, N);
    return matches(s.lhs, s.rhs);
}

QuatSeriesSides qu_ogf_sides(const QuatSeqContext& ctx, std::size_t N) {
    const SequenceBasis& b = ctx.basis();
    if (b.us_zero()) throw UndefinedSequence("U_s = 0");
    const QuadExt inv = b.den_u().inv();
    const QuatK& Ta = ctx.theta_alpha();
    const QuatK& Tb = ctx.theta_beta();
    QuatK c0 = inv * (Ta - Tb);
    QuatK c1 = -(inv * (b.bpow(1) * Ta - b.apow(1) * Tb));
    return {series_times_denominator(ctx, N, false), padded_numerator(std::move(c0), std::move(c1), N)};
}

bool qu_ogf_check(const QuatSeqContext& ctx, std::size_t N) {
    const auto s = qu_ogf_sides(ctx, N);
    return matches(s.lhs, s.rhs);
}

QuatSides qw_egf_sides(const QuatSeqContext& ctx, std::size_t n) {
    const SequenceBasis& b = ctx.basis();
    const QuadExt an = b.apow(1).pow(n);
    const QuadExt bn = b.bpow(1).pow(n);
    QuatK rhs = b.den_w().inv() * ((b.A() * an) * ctx.theta_alpha() - (b.B() * bn) * ctx.theta_beta());
    return {ctx.qw_at(n), std::move(rhs)};
}

bool qw_egf_check(const QuatSeqContext& ctx, std::size_t n) {
    const auto s = qw_egf_sides(ctx, n);
    return matches(s.lhs, s.rhs);
}

SeqMatrix2<Rational> h_matrix(const SequenceBasis& b) {
    return SeqMatrix2<Rational>{{{{b.Vs(), -b.qs()}, {Rational(1), Rational(0)}}}};
}

SeqMatrix2<Rational> h_power(const SequenceBasis& b, std::uint64_t n) {
    return matrix_pow(h_matrix(b), n, Rational(1), Rational(0));
}

SeqMatrix2<Rational> h_power_closed(const SequenceBasis& b, std::size_t n) {
    if (n < 1) throw InvalidArgument("H(s)^n closed form needs n >= 1");
    return SeqMatrix2<Rational>{{{{b.us(n + 1), -(b.qs() * b.us(n))}, {b.us(n), -(b.qs() * b.us(n - 1))}}}};
}

HPowerSides h_power_sides(const SequenceBasis& b, std::size_t n) {
    SeqMatrix2<Rational> power = h_power(b, n);
    Rational det = determinant(power);
    return {std::move(power), h_power_closed(b, n), std::move(det), b.qs().pow(n)};
}

QuatMatrixSides qw_matrix_sides(const QuatSeqContext& ctx, std::size_t n) {
    if (n < 1) throw InvalidArgument("matrix identity needs n >= 1");
    const Rational& qs = ctx.qs();
    auto window = [&](std::size_t top) {
        return SeqMatrix2<QuatQ>{{{{ctx.qw_at(top + 1), -qs * ctx.qw_at(top)},
                                   {ctx.qw_at(top), -qs * ctx.qw_at(top - 1)}}}};
    };
    const SeqMatrix2<Rational> H = h_power(ctx.basis(), n - 1);
    const PgqParams& l = ctx.lambda();
    SeqMatrix2<QuatQ> Hq{{{{QuatQ::scalar(H(0, 0), l), QuatQ::scalar(H(0, 1), l)},
                           {QuatQ::scalar(H(1, 0), l), QuatQ::scalar(H(1, 1), l)}}}};
    return {window(n), window(1) * Hq};
}

bool qw_matrix_check(const QuatSeqContext& ctx, std::size_t n) {
    const auto s = qw_matrix_sides(ctx, n);
    return s.lhs == s.rhs;
}

QuatRationalSides index_reduction_sum_sides(const QuatSeqContext& ctx, std::size_t n, std::size_t m) {
    if (m < 1) throw InvalidArgument("index reduction needs m >= 1");
    const SequenceBasis& b = ctx.basis();
    const std::size_t k = n + m;
    QuatQ rhs = b.us(k) * ctx.qw_at(2) - (ctx.qs() * b.us(k - 1)) * ctx.qw_at(1);
    return {ctx.qw_at(k + 1), std::move(rhs)};
}

QuatRationalSides index_reduction_double_sides(const QuatSeqContext& ctx, std::size_t n) {
    if (n < 1) throw InvalidArgument("index doubling needs n >= 1");
    const SequenceBasis& b = ctx.basis();
    QuatQ rhs = b.us(2 * n) * ctx.qw_at(1) - (ctx.qs() * b.us(2 * n - 1)) * ctx.qw_at(0);
    return {ctx.qw_at(2 * n), std::move(rhs)};
}

bool index_reduction_checks(const QuatSeqContext& ctx, std::size_t n, std::size_t m) {
    const auto first = index_reduction_sum_sides(ctx, n, m);
    if (!(first.lhs == first.rhs)) return false;
    if (n >= 1) {
        const auto second = index_reduction_double_sides(ctx, n);
        if (!(second.lhs == second.rhs)) return false;
    }
    return true;
}

}  // namespace hq3
