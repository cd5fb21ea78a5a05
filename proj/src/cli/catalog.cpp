#include "hq3/catalog.hpp"

#include "hq3/errors.hpp"

#include <sstream>

namespace hq3 {

namespace {

constexpr const char* kRoots = "q != 0, p^2 - 4q != 0";
constexpr const char* kRootsW = "q != 0, p^2 - 4q != 0, W_s != 0";
constexpr const char* kRootsU = "q != 0, p^2 - 4q != 0, U_s != 0";
constexpr const char* kRootsWU = "q != 0, p^2 - 4q != 0, W_s != 0, U_s != 0";

IdentityInfo make(std::string id, std::string title, std::string statement, std::string hypotheses,
                  std::string location, Scope scope, IndexShape shape) {
    IdentityInfo info;
    info.id = std::move(id);
    info.title = std::move(title);
    info.statement = std::move(statement);
    info.hypotheses = std::move(hypotheses);
    info.location = std::move(location);
    info.scope = scope;
    info.shape = shape;
    return info;
}

std::vector<IdentityInfo> build() {
    std::vector<IdentityInfo> c;
    auto add = [&](IdentityInfo info) -> IdentityInfo& { return c.emplace_back(std::move(info)); };

    // scalar identities
    add(make("eq1", "higher-order Horadam definition",
             "W_n(s) = W_{sn} / W_s, equal to the recurrence value and to "
             "(A alpha^{sn} - B beta^{sn}) / (A alpha^s - B beta^s)",
             kRootsW, "definition of W_n(s)", Scope::Scalar, IndexShape::Single))
        .needs_ws = true;
    add(make("eq2", "higher-order Horadam recurrence",
             "W_{n+2}(s) = V_s W_{n+1}(s) - q^s W_n(s), W_0(s) = W_0 (alpha - beta) / (A alpha^s - B beta^s), "
             "W_1(s) = 1",
             kRootsW, "recurrence for W_n(s)", Scope::Scalar, IndexShape::Single))
        .needs_ws = true;
    add(make("eq3", "higher-order generalized Fibonacci definition",
             "U_n(s) = U_{sn} / U_s = (alpha^{sn} - beta^{sn}) / (alpha^s - beta^s), with "
             "U_{n+2}(s) = V_s U_{n+1}(s) - q^s U_n(s), U_0(s) = 0, U_1(s) = 1",
             kRootsU, "definition of U_n(s)", Scope::Scalar, IndexShape::Single))
        .needs_us = true;
    add(make("ab", "product of the Binet coefficients",
             "A B = (W_1 - W_0 beta)(W_1 - W_0 alpha) = W_1^2 - p W_0 W_1 + q W_0^2", kRoots,
             "Binet coefficients A, B", Scope::Scalar, IndexShape::Once));
    add(make("cassini_w", "Cassini identity for W_n(s)",
             "W_n(s)^2 - W_{n-1}(s) W_{n+1}(s) = A B q^{s(n-1)} (U_s / W_s)^2, n >= 1", kRootsW,
             "classical quadratic identities", Scope::Scalar, IndexShape::Single));
    c.back().n_min = 1;
    c.back().needs_ws = true;
    add(make("catalan_w", "Catalan identity for W_n(s)",
             "W_n(s)^2 - W_{n-m}(s) W_{n+m}(s) = A B q^{s(n-m)} (U_{sm} / W_s)^2, n >= m", kRootsW,
             "classical quadratic identities", Scope::Scalar, IndexShape::Pair))
        .needs_ws = true;
    add(make("docagne_w", "d'Ocagne identity for W_n(s)",
             "W_{m+1}(s) W_n(s) - W_m(s) W_{n+1}(s) = A B q^{sm} U_s U_{s(n-m)} / W_s^2, n >= m", kRootsW,
             "classical quadratic identities", Scope::Scalar, IndexShape::Pair))
        .needs_ws = true;
    add(make("cassini_u", "Cassini identity for U_n(s)",
             "U_n(s)^2 - U_{n-1}(s) U_{n+1}(s) = q^{s(n-1)}, n >= 1", kRootsU, "classical quadratic identities",
             Scope::Scalar, IndexShape::Single));
    c.back().n_min = 1;
    c.back().needs_us = true;
    add(make("catalan_u", "Catalan identity for U_n(s)",
             "U_n(s)^2 - U_{n-m}(s) U_{n+m}(s) = q^{s(n-m)} U_m(s)^2, n >= m", kRootsU,
             "classical quadratic identities", Scope::Scalar, IndexShape::Pair))
        .needs_us = true;
    add(make("docagne_u", "d'Ocagne identity for U_n(s)",
             "U_{m+1}(s) U_n(s) - U_m(s) U_{n+1}(s) = q^{sm} U_{n-m}(s), n >= m", kRootsU,
             "classical quadratic identities", Scope::Scalar, IndexShape::Pair))
        .needs_us = true;
    add(make("id1", "summation of W_r(s)",
             "sum_{r=0}^{n} W_r(s) = [q^s W_n(s) - W_{n+1}(s) + W_1(s) + (1 - V_s) W_0(s)] / (q^s - V_s + 1)",
             "q != 0, p^2 - 4q != 0, W_s != 0, q^s - V_s + 1 != 0", "identity (id1)", Scope::Scalar,
             IndexShape::Single));
    c.back().needs_ws = c.back().needs_sum_den = true;
    add(make("id2", "ordinary generating function of W_n(s)",
             "sum_n W_n(s) x^n = [W_0(s) + (W_1(s) - V_s W_0(s)) x] / (1 - V_s x + q^s x^2), "
             "compared coefficientwise after clearing the denominator",
             kRootsW, "identity (id2)", Scope::Scalar, IndexShape::Series))
        .needs_ws = true;
    add(make("id3", "decomposition of W_n(s)", "W_n(s) = W_0(s) U_{n+1}(s) + [1 - V_s W_0(s)] U_n(s)", kRootsWU,
             "identity (id3)", Scope::Scalar, IndexShape::Single));
    c.back().needs_ws = c.back().needs_us = true;
    add(make("thm5.3", "powers of the H(s)-matrix",
             "H(s) = [[V_s, -q^s], [1, 0]] satisfies H(s)^n = [[U_{n+1}(s), -q^s U_n(s)], [U_n(s), -q^s U_{n-1}(s)]] "
             "and det H(s)^n = q^{sn}, n >= 1",
             kRootsU, "Theorem 5.3", Scope::Scalar, IndexShape::Single));
    c.back().n_min = 1;
    c.back().needs_us = true;

    // quaternion identities
    add(make("thm2.1", "recurrence of QW_n(s)",
             "QW_{n+2}(s) = V_s QW_{n+1}(s) - q^s QW_n(s), where "
             "QW_n(s) = W_n(s) + W_{n+1}(s) i + W_{n+2}(s) j + W_{n+3}(s) k",
             kRootsW, "Theorem 2.1", Scope::Quaternion, IndexShape::Single))
        .needs_ws = true;
    add(make("thm2.2", "norm of QW_n(s)",
             "N(QW_n(s)) = [A^2 alpha^{2sn} Phi_alpha - 2 A B (alpha beta)^{sn} Phi_{alpha beta} + "
             "B^2 beta^{2sn} Phi_beta] / (A alpha^s - B beta^s)^2 with "
             "Phi_x = 1 + l1 l2 x + l1 l3 x^2 + l2 l3 x^3 at x = alpha^{2s}, beta^{2s}, (alpha beta)^s",
             kRootsW, "Theorem 2.2", Scope::Quaternion, IndexShape::Single))
        .needs_ws = true;
    add(make("thm2.3", "Binet formula for QW_n(s)",
             "QW_n(s) = (A alpha^{sn} Theta_alpha - B beta^{sn} Theta_beta) / (A alpha^s - B beta^s), "
             "Theta_x = 1 + x^s i + x^{2s} j + x^{3s} k",
             kRootsW, "Theorem 2.3", Scope::Quaternion, IndexShape::Single))
        .needs_ws = true;
    add(make("cor2.3", "Binet formula for QU_n(s)",
             "QU_n(s) = (alpha^{sn} Theta_alpha - beta^{sn} Theta_beta) / (alpha^s - beta^s)", kRootsU,
             "Corollary of Theorem 2.3", Scope::Quaternion, IndexShape::Single))
        .needs_us = true;
    auto& prod = add(make("prod3", "products of Theta_alpha and Theta_beta",
                          "Theta_alpha Theta_beta = S - T and Theta_beta Theta_alpha = S + T, with "
                          "S = (1 - l1 l2 (alpha beta)^s - l1 l3 (alpha beta)^{2s} - l2 l3 (alpha beta)^{3s}) + "
                          "(alpha^s + beta^s) i + (alpha^{2s} + beta^{2s}) j + (alpha^{3s} + beta^{3s}) k and "
                          "T = (alpha beta)^s (alpha^s - beta^s) [l3 (alpha beta)^s i - l2 (alpha^s + beta^s) j + l1 k]",
                          kRoots, "product displays before Theorem 3.1", Scope::Quaternion, IndexShape::Once));
    prod.cube_exponent_note = true;
    add(make("eqc", "commutator of Theta_beta and Theta_alpha",
             "Theta_beta Theta_alpha - Theta_alpha Theta_beta = "
             "2 (alpha beta)^s (alpha^s - beta^s) [l3 (alpha beta)^s i - l2 (alpha^s + beta^s) j + l1 k] = "
             "2 q^s sqrt(D) U_s (l3 q^s i - l2 V_s j + l1 k)",
             kRoots, "commutator identity (c)", Scope::Quaternion, IndexShape::Once));
    auto& cat = add(make("thm3.1", "Catalan identity for QW_n(s)",
                         "QW_n(s)^2 - QW_{n-m}(s) QW_{n+m}(s) = A B (alpha beta)^{s(n-m)} (alpha^{sm} - beta^{sm}) / "
                         "(A alpha^s - B beta^s)^2 * [(alpha^{sm} - beta^{sm}) Theta_alpha Theta_beta + "
                         "alpha^{sm} [Theta_beta, Theta_alpha]], n >= m",
                         kRootsW, "Theorem 3.1", Scope::Quaternion, IndexShape::Pair));
    cat.needs_ws = cat.cube_exponent_note = true;
    auto& cas = add(make("cor3.1", "Cassini identity for QW_n(s)",
                         "QW_n(s)^2 - QW_{n-1}(s) QW_{n+1}(s) = A B (alpha beta)^{s(n-1)} (alpha^s - beta^s) / "
                         "(A alpha^s - B beta^s)^2 * [(alpha^s - beta^s) Theta_alpha Theta_beta + "
                         "alpha^s [Theta_beta, Theta_alpha]], n >= 1",
                         kRootsW, "Corollary of Theorem 3.1", Scope::Quaternion, IndexShape::Single));
    cas.n_min = 1;
    cas.needs_ws = cas.cube_exponent_note = true;
    auto& doc = add(make("thm3.2", "d'Ocagne identity for QW_n(s)",
                         "QW_{m+1}(s) QW_n(s) - QW_m(s) QW_{n+1}(s) = A B (alpha beta)^{sm} (alpha^s - beta^s) / "
                         "(A alpha^s - B beta^s)^2 * [(alpha^{s(n-m)} - beta^{s(n-m)}) Theta_alpha Theta_beta + "
                         "alpha^{s(n-m)} [Theta_beta, Theta_alpha]], n >= m",
                         kRootsW, "Theorem 3.2", Scope::Quaternion, IndexShape::Pair));
    doc.needs_ws = doc.cube_exponent_note = true;
    add(make("cor3.2", "commutator of consecutive QW_n(s)",
             "QW_{n+1}(s) QW_n(s) - QW_n(s) QW_{n+1}(s) = A B (alpha beta)^{sn} (alpha^s - beta^s) / "
             "(A alpha^s - B beta^s)^2 * [Theta_beta, Theta_alpha]",
             kRootsW, "Corollary of Theorem 3.2", Scope::Quaternion, IndexShape::Single))
        .needs_ws = true;
    auto& sum = add(make("thm4.1", "summation of QW_r(s)",
                         "sum_{r=0}^{n} QW_r(s) = [q^s QW_n(s) - QW_{n+1}(s) + (W_1(s) + (1 - V_s) W_0(s))(1 + i + j + k)] "
                         "/ (q^s - V_s + 1) - [W_0(s) i + (W_0(s) + W_1(s)) j + ((1 - q^s) W_0(s) + (1 + V_s) W_1(s)) k]",
                         "q != 0, p^2 - 4q != 0, W_s != 0, q^s - V_s + 1 != 0", "Theorem 4.1", Scope::Quaternion,
                         IndexShape::Single));
    sum.needs_ws = sum.needs_sum_den = true;
    auto& mix = add(make("thm4.2", "mixed product of QW(s) and QU(s)",
                         "QW_m(s) QU_n(s) - QU_m(s) QW_n(s) = (alpha - beta) W_0 (alpha beta)^{sm} / "
                         "(A alpha^s - B beta^s) * [U_{n-m}(s) Theta_alpha Theta_beta + 2 alpha^{s(n-m+1)} beta^s "
                         "(l3 (alpha beta)^s i - l2 (alpha^s + beta^s) j + l1 k)], n >= m",
                         kRootsWU, "Theorem 4.2", Scope::Quaternion, IndexShape::Pair));
    mix.needs_ws = mix.needs_us = mix.cube_exponent_note = true;
    auto& mixc = add(make("cor4.2", "commutator of QW_n(s) and QU_n(s)",
                          "QW_n(s) QU_n(s) - QU_n(s) QW_n(s) = 2 (alpha - beta) W_0 (alpha beta)^{s(n+1)} / "
                          "(A alpha^s - B beta^s) * (l3 (alpha beta)^s i - l2 (alpha^s + beta^s) j + l1 k)",
                          kRootsWU, "Corollary of Theorem 4.2", Scope::Quaternion, IndexShape::Single));
    mixc.needs_ws = mixc.needs_us = true;
    add(make("thm5.1", "ordinary generating function of QW_n(s)",
             "sum_n QW_n(s) x^n = [A Theta_alpha - B Theta_beta - (A beta^s Theta_alpha - B alpha^s Theta_beta) x] / "
             "[(A alpha^s - B beta^s)(1 - V_s x + q^s x^2)], compared coefficientwise after clearing the denominator",
             kRootsW, "Theorem 5.1", Scope::Quaternion, IndexShape::Series))
        .needs_ws = true;
    add(make("cor5.1", "ordinary generating function of QU_n(s)",
             "sum_n QU_n(s) x^n = [Theta_alpha - Theta_beta - (beta^s Theta_alpha - alpha^s Theta_beta) x] / "
             "[(alpha^s - beta^s)(1 - V_s x + q^s x^2)]",
             kRootsU, "Corollary of Theorem 5.1", Scope::Quaternion, IndexShape::Series))
        .needs_us = true;
    add(make("thm5.2", "exponential generating function of QW_n(s)",
             "sum_n QW_n(s) x^n / n! = [A Theta_alpha e^{alpha^s x} - B Theta_beta e^{beta^s x}] / "
             "(A alpha^s - B beta^s), compared coefficient by coefficient",
             kRootsW, "Theorem 5.2", Scope::Quaternion, IndexShape::Single))
        .needs_ws = true;
    add(make("thm5.4", "matrix identity for QW_n(s)",
             "[[QW_{n+1}(s), -q^s QW_n(s)], [QW_n(s), -q^s QW_{n-1}(s)]] = "
             "[[QW_2(s), -q^s QW_1(s)], [QW_1(s), -q^s QW_0(s)]] H(s)^{n-1}, n >= 1",
             kRootsW, "Theorem 5.4", Scope::Quaternion, IndexShape::Single));
    c.back().n_min = 1;
    c.back().needs_ws = true;
    auto& ra = add(make("cor5.4a", "index reduction of QW(s) by U(s)",
                        "QW_{n+m+1}(s) = QW_2(s) U_{n+m}(s) - q^s QW_1(s) U_{n+m-1}(s), m >= 1", kRootsWU,
                        "Corollary of Theorem 5.4", Scope::Quaternion, IndexShape::Pair));
    ra.m_min = 1;
    ra.needs_ws = ra.needs_us = true;
    auto& rb = add(make("cor5.4b", "index doubling of QW(s) by U(s)",
                        "QW_{2n}(s) = QW_1(s) U_{2n}(s) - q^s QW_0(s) U_{2n-1}(s), n >= 1", kRootsWU,
                        "Corollary of Theorem 5.4", Scope::Quaternion, IndexShape::Single));
    rb.n_min = 1;
    rb.needs_ws = rb.needs_us = true;
    return c;
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
    static const std::vector<IdentityInfo> catalog = build();
    return catalog;
}

const IdentityInfo& find_identity(std::string_view id) {
    for (const auto& info : identity_catalog()) {
        if (info.id == id) return info;
    }
    throw UnknownIdentity(std::string(id));
}

bool is_known_identity(std::string_view id) {
    for (const auto& info : identity_catalog()) {
        if (info.id == id) return true;
    }
    return false;
}

std::string explain_text(const IdentityInfo& info) {
    std::ostringstream os;
    os << info.id << ": " << info.title << "\n"
       << "  statement:  " << info.statement << "\n"
       << "  hypotheses: " << info.hypotheses << "\n"
       << "  location:   " << info.location << "\n";
    if (info.cube_exponent_note) {
        os << "  note:       the cube term alpha^{3s} + beta^{3s} is read with exponent 3s throughout\n";
    }
    return os.str();
}

}  // namespace hq3
