#include "hq3/horadam.hpp"

#include "hq3/errors.hpp"

#include <sstream>

namespace hq3 {

namespace {

// a_{k+2} = p a_{k+1} - q a_k
Rational linear_nth(Rational a0, Rational a1, const Rational& p, const Rational& q, std::size_t n) {
    if (n == 0) return a0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational next = p * a1 - q * a0;
        a0 = std::move(a1);
        a1 = std::move(next);
    }
    return a1;
}

std::vector<Rational> linear_table(const Rational& a0, const Rational& a1, const Rational& p, const Rational& q,
                                   std::size_t last) {
    std::vector<Rational> t;
    t.reserve(last + 1);
    t.push_back(a0);
    if (last >= 1) t.push_back(a1);
    for (std::size_t k = 2; k <= last; ++k) t.push_back(p * t[k - 1] - q * t[k - 2]);
    return t;
}

const Rational& checked(const std::vector<Rational>& t, std::size_t n, const char* what) {
    if (n >= t.size()) {
        throw InvalidArgument(std::string(what) + " index " + std::to_string(n) + " beyond table bound " +
                              std::to_string(t.size()));
    }
    return t[n];
}

void require_order(std::size_t n, std::size_t m) {
    if (m > n) throw InvalidArgument("index pair needs n >= m");
}

}  // namespace

HoradamParams::HoradamParams(Rational p_, Rational q_, Rational W0_, Rational W1_, int s_, PgqParams lambda_)
    : p(std::move(p_)), q(std::move(q_)), W0(std::move(W0_)), W1(std::move(W1_)), s(s_), lambda(std::move(lambda_)) {
    if (q.is_zero()) throw ZeroRoot();
    if (discriminant().is_zero()) throw DegenerateRoots();
    if (s < 1) throw InvalidArgument("s must be a positive integer");
}

HoradamParams HoradamParams::with_lambda(PgqParams l) const {
    HoradamParams r = *this;
    r.lambda = std::move(l);
    return r;
}

HoradamParams HoradamParams::with_s(int s_) const {
    return HoradamParams(p, q, W0, W1, s_, lambda);
}

std::string HoradamParams::str() const {
    std::ostringstream os;
    os << "p=" << p << " q=" << q << " W0=" << W0 << " W1=" << W1 << " s=" << s << " lambda=" << lambda.str();
    return os.str();
}

std::optional<std::string> root_degeneracy(const Rational& p, const Rational& q) {
    if (q.is_zero()) return "q = 0";
    if ((p * p - Rational(4) * q).is_zero()) return "p^2 - 4q = 0";
    return std::nullopt;
}

Rational horadam_w(const HoradamParams& P, std::size_t n) { return linear_nth(P.W0, P.W1, P.p, P.q, n); }

Rational lucas_v(const HoradamParams& P, std::size_t n) { return linear_nth(Rational(2), P.p, P.p, P.q, n); }

Rational fib_u(const HoradamParams& P, std::size_t n) { return linear_nth(Rational(0), Rational(1), P.p, P.q, n); }

Rational higher_w_ratio(const HoradamParams& P, std::size_t n) {
    const auto s = static_cast<std::size_t>(P.s);
    const Rational Ws = horadam_w(P, s);
    if (Ws.is_zero()) throw UndefinedSequence("W_s = 0");
    return horadam_w(P, s * n) / Ws;
}

Rational higher_w_rec(const HoradamParams& P, std::size_t n) {
    const auto s = static_cast<std::size_t>(P.s);
    const Rational Ws = horadam_w(P, s);
    if (Ws.is_zero()) throw UndefinedSequence("W_s = 0");
    return linear_nth(P.W0 / Ws, Rational(1), lucas_v(P, s), P.q.pow(s), n);
}

Rational higher_u(const HoradamParams& P, std::size_t n) {
    const auto s = static_cast<std::size_t>(P.s);
    const Rational Us = fib_u(P, s);
    if (Us.is_zero()) throw UndefinedSequence("U_s = 0");
    return fib_u(P, s * n) / Us;
}

Rational ab_product(const HoradamParams& P) { return P.W1 * P.W1 - P.p * P.W0 * P.W1 + P.q * P.W0 * P.W0; }

QuadExt w0s_literal(const HoradamParams& P) {
    const Roots r = embed_roots(P.p, P.q);
    const QuadExt A = QuadExt(P.W1) - r.beta * P.W0;
    const QuadExt B = QuadExt(P.W1) - r.alpha * P.W0;
    const auto s = static_cast<std::uint64_t>(P.s);
    const QuadExt den = A * r.alpha.pow(s) - B * r.beta.pow(s);
    if (den.is_zero()) throw UndefinedSequence("A alpha^s - B beta^s = 0");
    return (r.alpha - r.beta) * P.W0 / den;
}

// ---------------------------------------------------------------- SeqCache

SeqCache::SeqCache(HoradamParams P) : P_(std::move(P)) {
    w_ = {P_.W0, P_.W1};
    u_ = {Rational(0), Rational(1)};
    v_ = {Rational(2), P_.p};
}

const Rational& SeqCache::extend(std::vector<Rational>& t, std::size_t n, const Rational& c1, const Rational& c2) {
    while (t.size() <= n) {
        const std::size_t k = t.size();
        t.push_back(c1 * t[k - 1] - c2 * t[k - 2]);
    }
    return t[n];
}

const Rational& SeqCache::w(std::size_t n) { return extend(w_, n, P_.p, P_.q); }
const Rational& SeqCache::u(std::size_t n) { return extend(u_, n, P_.p, P_.q); }
const Rational& SeqCache::v(std::size_t n) { return extend(v_, n, P_.p, P_.q); }

const Rational& SeqCache::ws(std::size_t n) {
    if (ws_.empty()) {
        const auto s = static_cast<std::size_t>(P_.s);
        const Rational Ws = w(s);
        if (Ws.is_zero()) throw UndefinedSequence("W_s = 0");
        if (!Vs_) {
            Vs_ = v(s);
            qs_ = P_.q.pow(s);
        }
        ws_ = {P_.W0 / Ws, Rational(1)};
    }
    return extend(ws_, n, *Vs_, *qs_);
}

const Rational& SeqCache::us(std::size_t n) {
    if (us_.empty()) {
        const auto s = static_cast<std::size_t>(P_.s);
        if (u(s).is_zero()) throw UndefinedSequence("U_s = 0");
        if (!Vs_) {
            Vs_ = v(s);
            qs_ = P_.q.pow(s);
        }
        us_ = {Rational(0), Rational(1)};
    }
    return extend(us_, n, *Vs_, *qs_);
}

// ----------------------------------------------------------- SequenceBasis

SequenceBasis::SequenceBasis(const HoradamParams& P, std::size_t max_index)
    : P_(P), max_index_(max_index), roots_(embed_roots(P.p, P.q)) {
    const auto s = static_cast<std::size_t>(P.s);
    const std::size_t last = s * max_index + 3;
    w_ = linear_table(P.W0, P.W1, P.p, P.q, std::max(last, 3 * s));
    u_ = linear_table(Rational(0), Rational(1), P.p, P.q, std::max(last, 3 * s));
    v_ = linear_table(Rational(2), P.p, P.p, P.q, 3 * s);
    Vs_ = v_[s];
    qs_ = P.q.pow(s);
    ws_zero_ = w_[s].is_zero();
    us_zero_ = u_[s].is_zero();
    sum_den_zero_ = (qs_ - Vs_ + Rational(1)).is_zero();

    if (!ws_zero_) {
        ws_ = linear_table(P.W0 / w_[s], Rational(1), Vs_, qs_, max_index);
        ws_ratio_.reserve(max_index + 1);
        for (std::size_t n = 0; n <= max_index; ++n) ws_ratio_.push_back(w_[s * n] / w_[s]);
    }
    if (!us_zero_) {
        us_ = linear_table(Rational(0), Rational(1), Vs_, qs_, max_index);
        us_ratio_.reserve(max_index + 1);
        for (std::size_t n = 0; n <= max_index; ++n) us_ratio_.push_back(u_[s * n] / u_[s]);
    }

    A_ = QuadExt(P.W1) - roots_.beta * P.W0;
    B_ = QuadExt(P.W1) - roots_.alpha * P.W0;
    const QuadExt as = roots_.alpha.pow(s);
    const QuadExt bs = roots_.beta.pow(s);
    apow_.reserve(max_index + 7);
    bpow_.reserve(max_index + 7);
    apow_.push_back(QuadExt(1).in_field_of(as));
    bpow_.push_back(QuadExt(1).in_field_of(bs));
    for (std::size_t k = 1; k <= max_index + 6; ++k) {
        apow_.push_back(apow_.back() * as);
        bpow_.push_back(bpow_.back() * bs);
    }
    den_w_ = A_ * as - B_ * bs;
    den_u_ = as - bs;
    root_gap_ = roots_.alpha - roots_.beta;
    abpow_.reserve(apow_.size());
    pow_gap_.reserve(apow_.size());
    for (std::size_t k = 0; k < apow_.size(); ++k) {
        abpow_.push_back(apow_[k] * bpow_[k]);
        pow_gap_.push_back(apow_[k] - bpow_[k]);
    }
    // W_s = 0 exactly when A alpha^s - B beta^s = W_s (alpha - beta) vanishes; likewise for U_s.
    if (!ws_zero_) {
        inv_den_w_ = den_w_.inv();
        ab_over_den_w2_ = A_ * B_ * inv_den_w_ * inv_den_w_;
    }
    if (!us_zero_) inv_den_u_ = den_u_.inv();
}

const Rational& SequenceBasis::ws(std::size_t n) const {
    if (ws_zero_) throw UndefinedSequence("W_s = 0");
    return checked(ws_, n, "W_n(s)");
}

const Rational& SequenceBasis::ws_ratio(std::size_t n) const {
    if (ws_zero_) throw UndefinedSequence("W_s = 0");
    return checked(ws_ratio_, n, "W_n(s)");
}

const Rational& SequenceBasis::us(std::size_t n) const {
    if (us_zero_) throw UndefinedSequence("U_s = 0");
    return checked(us_, n, "U_n(s)");
}

const Rational& SequenceBasis::us_ratio(std::size_t n) const {
    if (us_zero_) throw UndefinedSequence("U_s = 0");
    return checked(us_ratio_, n, "U_n(s)");
}

const Rational& SequenceBasis::w(std::size_t k) const { return checked(w_, k, "W_k"); }
const Rational& SequenceBasis::u(std::size_t k) const { return checked(u_, k, "U_k"); }
const Rational& SequenceBasis::v(std::size_t k) const { return checked(v_, k, "V_k"); }

const QuadExt& SequenceBasis::apow(std::size_t k) const {
    if (k >= apow_.size()) throw InvalidArgument("alpha power beyond table bound");
    return apow_[k];
}

const QuadExt& SequenceBasis::bpow(std::size_t k) const {
    if (k >= bpow_.size()) throw InvalidArgument("beta power beyond table bound");
    return bpow_[k];
}

const QuadExt& SequenceBasis::abpow(std::size_t k) const {
    if (k >= abpow_.size()) throw InvalidArgument("(alpha beta) power beyond table bound");
    return abpow_[k];
}

const QuadExt& SequenceBasis::pow_gap(std::size_t k) const {
    if (k >= pow_gap_.size()) throw InvalidArgument("power gap beyond table bound");
    return pow_gap_[k];
}

const QuadExt& SequenceBasis::inv_den_w() const {
    if (ws_zero_) throw UndefinedSequence("W_s = 0");
    return inv_den_w_;
}

const QuadExt& SequenceBasis::ab_over_den_w2() const {
    if (ws_zero_) throw UndefinedSequence("W_s = 0");
    return ab_over_den_w2_;
}

const QuadExt& SequenceBasis::inv_den_u() const {
    if (us_zero_) throw UndefinedSequence("U_s = 0");
    return inv_den_u_;
}

// ------------------------------------------------------- scalar identities

ScalarSides definition_sides_w(const SequenceBasis& b, std::size_t n) {
    QuadExt binet = (b.A() * b.apow(n) - b.B() * b.bpow(n)) / b.den_w();
    return {b.ws_ratio(n), b.ws(n), std::move(binet)};
}

ScalarSides recurrence_sides_w(const SequenceBasis& b, std::size_t n) {
    if (n == 0) {
        const QuadExt literal = b.root_gap() * b.params().W0 / b.den_w();
        return {b.ws_ratio(0), b.params().W0 / b.w(static_cast<std::size_t>(b.s())), literal};
    }
    if (n == 1) return {b.ws_ratio(1), Rational(1), std::nullopt};
    return {b.ws_ratio(n), b.Vs() * b.ws_ratio(n - 1) - b.qs() * b.ws_ratio(n - 2), std::nullopt};
}

ScalarSides definition_sides_u(const SequenceBasis& b, std::size_t n) {
    QuadExt binet = (b.apow(n) - b.bpow(n)) / b.den_u();
    return {b.us_ratio(n), b.us(n), std::move(binet)};
}

ScalarSides ab_sides(const SequenceBasis& b) {
    const QuadExt AB = b.A() * b.B();
    return {ab_product(b.params()), AB.a(), AB};
}

ScalarSides scalar_cassini_w(const SequenceBasis& b, std::size_t n) {
    if (n < 1) throw InvalidArgument("Cassini needs n >= 1");
    const auto s = static_cast<std::size_t>(b.s());
    const Rational lhs = b.ws(n) * b.ws(n) - b.ws(n - 1) * b.ws(n + 1);
    const Rational ratio = b.u(s) / b.w(s);
    const Rational rhs = ab_product(b.params()) * b.qs().pow(n - 1) * ratio * ratio;
    const QuadExt f = b.den_u() / b.den_w();
    QuadExt binet = b.A() * b.B() * (b.apow(n - 1) * b.bpow(n - 1)) * (f * f);
    return {lhs, rhs, std::move(binet)};
}

ScalarSides scalar_catalan_w(const SequenceBasis& b, std::size_t n, std::size_t m) {
    require_order(n, m);
    const auto s = static_cast<std::size_t>(b.s());
    const Rational lhs = b.ws(n) * b.ws(n) - b.ws(n - m) * b.ws(n + m);
    const Rational ratio = b.u(s * m) / b.w(s);
    const Rational rhs = ab_product(b.params()) * b.qs().pow(n - m) * ratio * ratio;
    const QuadExt f = (b.apow(m) - b.bpow(m)) / b.den_w();
    QuadExt binet = b.A() * b.B() * (b.apow(n - m) * b.bpow(n - m)) * (f * f);
    return {lhs, rhs, std::move(binet)};
}

ScalarSides scalar_docagne_w(const SequenceBasis& b, std::size_t n, std::size_t m) {
    require_order(n, m);
    const auto s = static_cast<std::size_t>(b.s());
    const Rational lhs = b.ws(m + 1) * b.ws(n) - b.ws(m) * b.ws(n + 1);
    const Rational rhs =
        ab_product(b.params()) * b.qs().pow(m) * b.u(s) * b.u(s * (n - m)) / (b.w(s) * b.w(s));
    QuadExt binet = b.A() * b.B() * (b.apow(m) * b.bpow(m)) * (b.den_u() * (b.apow(n - m) - b.bpow(n - m))) /
                    (b.den_w() * b.den_w());
    return {lhs, rhs, std::move(binet)};
}

ScalarSides scalar_cassini_u(const SequenceBasis& b, std::size_t n) {
    if (n < 1) throw InvalidArgument("Cassini needs n >= 1");
    const Rational lhs = b.us(n) * b.us(n) - b.us(n - 1) * b.us(n + 1);
    return {lhs, b.qs().pow(n - 1), b.apow(n - 1) * b.bpow(n - 1)};
}

ScalarSides scalar_catalan_u(const SequenceBasis& b, std::size_t n, std::size_t m) {
    require_order(n, m);
    const Rational lhs = b.us(n) * b.us(n) - b.us(n - m) * b.us(n + m);
    const Rational rhs = b.qs().pow(n - m) * b.us(m) * b.us(m);
    const QuadExt f = (b.apow(m) - b.bpow(m)) / b.den_u();
    return {lhs, rhs, b.apow(n - m) * b.bpow(n - m) * (f * f)};
}

ScalarSides scalar_docagne_u(const SequenceBasis& b, std::size_t n, std::size_t m) {
    require_order(n, m);
    const Rational lhs = b.us(m + 1) * b.us(n) - b.us(m) * b.us(n + 1);
    const Rational rhs = b.qs().pow(m) * b.us(n - m);
    return {lhs, rhs, b.apow(m) * b.bpow(m) * (b.apow(n - m) - b.bpow(n - m)) / b.den_u()};
}

ScalarSides scalar_sum_w(const SequenceBasis& b, std::size_t n) {
    if (b.sum_den_zero()) throw DegenerateDenominator("q^s - V_s + 1 = 0");
    Rational lhs(0);
    for (std::size_t r = 0; r <= n; ++r) lhs += b.ws(r);
    const Rational num = b.qs() * b.ws(n) - b.ws(n + 1) + b.ws(1) + (Rational(1) - b.Vs()) * b.ws(0);
    return {lhs, num / (b.qs() - b.Vs() + Rational(1)), std::nullopt};
}

SeriesSides scalar_ogf_sides(const SequenceBasis& b, std::size_t N) {
    const std::vector<Rational> den = {Rational(1), -b.Vs(), b.qs()};
    SeriesSides out;
    out.lhs.assign(N, Rational(0));
    for (std::size_t n = 0; n <= N; ++n) {
        for (std::size_t d = 0; d < den.size(); ++d) {
            if (n + d < N) out.lhs[n + d] += b.ws(n) * den[d];
        }
    }
    out.rhs.assign(N, Rational(0));
    if (N > 0) out.rhs[0] = b.ws(0);
    if (N > 1) out.rhs[1] = b.ws(1) - b.Vs() * b.ws(0);
    return out;
}

bool scalar_ogf_check(const SequenceBasis& b, std::size_t N) { return scalar_ogf_sides(b, N).holds(); }

ScalarSides scalar_decompose_sides(const SequenceBasis& b, std::size_t n) {
    const Rational& w0 = b.ws(0);
    Rational rhs = w0 * b.us(n + 1) + (Rational(1) - b.Vs() * w0) * b.us(n);
    return {b.ws(n), std::move(rhs), std::nullopt};
}

bool scalar_decompose_check(const SequenceBasis& b, std::size_t n) { return scalar_decompose_sides(b, n).holds(); }

ScalarSides scalar_catalan_w(const HoradamParams& P, std::size_t n, std::size_t m) {
    return scalar_catalan_w(SequenceBasis(P, n + m + 1), n, m);
}

ScalarSides scalar_docagne_w(const HoradamParams& P, std::size_t n, std::size_t m) {
    return scalar_docagne_w(SequenceBasis(P, n + 2), n, m);
}

ScalarSides scalar_sum_w(const HoradamParams& P, std::size_t n) { return scalar_sum_w(SequenceBasis(P, n + 2), n); }

bool scalar_ogf_check(const HoradamParams& P, std::size_t N) { return scalar_ogf_check(SequenceBasis(P, N + 1), N); }

bool scalar_decompose_check(const HoradamParams& P, std::size_t n) {
    return scalar_decompose_check(SequenceBasis(P, n + 2), n);
}

}  // namespace hq3
