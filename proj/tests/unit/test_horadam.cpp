#include "hq3/errors.hpp"
#include "hq3/horadam.hpp"

#include "../support/oracle.hpp"

#include <doctest.h>

using hq3::HoradamParams;
using hq3::QuadExt;
using hq3::Rational;
using hq3::SequenceBasis;

namespace {

HoradamParams fibonacci(int s = 1) { return HoradamParams(1, -1, 0, 1, s); }
HoradamParams lucas(int s = 1) { return HoradamParams(1, -1, 2, 1, s); }
HoradamParams mersenne(int s = 1) { return HoradamParams(3, 2, 0, 1, s); }

std::vector<Rational> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

template <class F>
std::vector<Rational> table(F f, std::size_t last) {
    std::vector<Rational> out;
    for (std::size_t n = 0; n <= last; ++n) out.push_back(f(n));
    return out;
}

/// Valid parameter sets from a small integer box, each with s in {1, 2, 3}.
std::vector<HoradamParams> small_grid() {
    std::vector<HoradamParams> out;
    for (long p = -3; p <= 3; ++p) {
        for (long q = -3; q <= 3; ++q) {
            if (hq3::root_degeneracy(p, q)) continue;
            for (long w0 = -2; w0 <= 2; ++w0) {
                for (long w1 = -2; w1 <= 2; w1 += 2) {
                    for (int s = 1; s <= 3; ++s) out.emplace_back(p, q, w0, w1, s);
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(HoradamParams(2, 1, 0, 1), hq3::DegenerateRoots);
    CHECK_THROWS_AS(HoradamParams(1, 0, 0, 1), hq3::ZeroRoot);
    CHECK_THROWS_AS(HoradamParams(1, -1, 0, 1, 0), hq3::InvalidArgument);
    CHECK(hq3::root_degeneracy(2, 1) == std::optional<std::string>("p^2 - 4q = 0"));
    CHECK(hq3::root_degeneracy(1, 0) == std::optional<std::string>("q = 0"));
    CHECK_FALSE(hq3::root_degeneracy(1, -1));
    CHECK(fibonacci().discriminant() == Rational(5));
    CHECK(lucas().with_s(3).s == 3);
}

TEST_CASE("Horadam, Lucas and Fibonacci companions") {
    CHECK(table([](auto n) { return hq3::horadam_w(fibonacci(), n); }, 6) == ints({0, 1, 1, 2, 3, 5, 8}));
    CHECK(table([](auto n) { return hq3::horadam_w(lucas(), n); }, 6) == ints({2, 1, 3, 4, 7, 11, 18}));
    CHECK(hq3::horadam_w(HoradamParams(3, -5, Rational(7, 2), 4), 0) == Rational(7, 2));
    CHECK(hq3::lucas_v(fibonacci(), 0) == Rational(2));
    CHECK(hq3::lucas_v(mersenne(), 1) == Rational(3));
    CHECK(hq3::lucas_v(fibonacci(), 2) == Rational(3));
    CHECK(table([](auto n) { return hq3::fib_u(mersenne(), n); }, 4) == ints({0, 1, 3, 7, 15}));
    CHECK(hq3::fib_u(fibonacci(), 5) == Rational(5));
}

TEST_CASE("higher-order sequences: golden tables") {
    CHECK(table([](auto n) { return hq3::higher_w_ratio(fibonacci(2), n); }, 4) == ints({0, 1, 3, 8, 21}));
    const std::vector<Rational> lucas2 = {Rational(2, 3), 1, Rational(7, 3), 6};
    CHECK(table([](auto n) { return hq3::higher_w_ratio(lucas(2), n); }, 3) == lucas2);
    CHECK(table([](auto n) { return hq3::higher_w_rec(lucas(2), n); }, 3) == lucas2);
    CHECK(table([](auto n) { return hq3::higher_u(fibonacci(2), n); }, 5) == ints({0, 1, 3, 8, 21, 55}));
    CHECK(hq3::higher_u(mersenne(2), 2) == Rational(5));
    CHECK(hq3::higher_u(mersenne(3), 0).is_zero());
    CHECK(hq3::higher_u(mersenne(3), 1).is_one());
    for (const auto& P : {fibonacci(1), lucas(2), mersenne(3), HoradamParams(-2, 3, 1, -2, 2)}) {
        CHECK(hq3::higher_w_ratio(P, 1).is_one());
        CHECK(hq3::higher_w_rec(P, 1).is_one());
    }
    // The normalized initial value from the Binet side is rational and agrees.
    CHECK(hq3::w0s_literal(lucas(2)) == QuadExt(Rational(2, 3)));
}

TEST_CASE("undefined higher-order sequences throw") {
    // p = 0 gives U_2 = p = 0, and W_2 = -q W_0 vanishes for W_0 = 0.
    const HoradamParams P(0, 1, 0, 1, 2);
    CHECK_THROWS_AS(hq3::higher_w_ratio(P, 3), hq3::UndefinedSequence);
    CHECK_THROWS_AS(hq3::higher_w_rec(P, 3), hq3::UndefinedSequence);
    CHECK_THROWS_AS(hq3::higher_u(P, 3), hq3::UndefinedSequence);
    const SequenceBasis b(P, 6);
    CHECK(b.ws_zero());
    CHECK(b.us_zero());
    CHECK_THROWS_AS(b.ws(2), hq3::UndefinedSequence);
    CHECK_THROWS_AS(b.inv_den_w(), hq3::UndefinedSequence);
}

TEST_CASE("A B product") {
    CHECK(hq3::ab_product(fibonacci()) == Rational(1));
    CHECK(hq3::ab_product(lucas()) == Rational(-5));
    CHECK(hq3::ab_product(HoradamParams(3, 5, 0, Rational(3, 2))) == Rational(9, 4));
    CHECK(hq3::ab_sides(SequenceBasis(lucas(3), 2)).holds());
}

TEST_CASE("library tables match the mpq oracle") {
    for (const auto& P : small_grid()) {
        CAPTURE(P.str());
        const SequenceBasis b(P, 20);
        const std::size_t last = static_cast<std::size_t>(P.s) * 20 + 3;
        const auto w = oracle::linear(P.W0.raw(), P.W1.raw(), P.p.raw(), P.q.raw(), last);
        const auto u = oracle::linear(0, 1, P.p.raw(), P.q.raw(), last);
        for (std::size_t k = 0; k <= last; ++k) {
            CHECK(oracle::same(b.w(k), w[k]));
            CHECK(oracle::same(b.u(k), u[k]));
        }
        if (!b.ws_zero()) {
            const auto ws = oracle::higher(P.p.raw(), P.q.raw(), P.W0.raw(), P.W1.raw(), P.s, 20);
            for (std::size_t n = 0; n <= 20; ++n) CHECK(oracle::same(b.ws(n), ws[n]));
        }
    }
}

TEST_CASE("dual-oracle equality and Binet consistency") {
    for (const auto& P : small_grid()) {
        CAPTURE(P.str());
        const SequenceBasis b(P, 20);
        const auto roots = hq3::embed_roots(P.p, P.q);
        const QuadExt A = QuadExt(P.W1) - roots.beta * P.W0;
        const QuadExt B = QuadExt(P.W1) - roots.alpha * P.W0;
        const QuadExt gap = roots.alpha - roots.beta;
        for (std::size_t n = 0; n <= 20; ++n) {
            // (alpha - beta) W_n = A alpha^n - B beta^n; V_n = alpha^n + beta^n; (alpha - beta) U_n = alpha^n - beta^n
            CHECK(gap * b.w(n) == A * roots.alpha.pow(n) - B * roots.beta.pow(n));
            CHECK(QuadExt(hq3::lucas_v(P, n)) == roots.alpha.pow(n) + roots.beta.pow(n));
            CHECK(gap * b.u(n) == roots.alpha.pow(n) - roots.beta.pow(n));
        }
        if (b.ws_zero()) continue;
        for (std::size_t n = 0; n <= 20; ++n) {
            CHECK(b.ws(n) == b.ws_ratio(n));
            CHECK(hq3::definition_sides_w(b, n).holds());
            CHECK(hq3::recurrence_sides_w(b, n).holds());
            CHECK(b.ws(n) * b.den_w() == b.A() * b.apow(n) - b.B() * b.bpow(n));
        }
        if (!b.us_zero()) {
            for (std::size_t n = 0; n <= 20; ++n) CHECK(hq3::definition_sides_u(b, n).holds());
        }
    }
}

TEST_CASE("s = 1 reduces to W_n / W_1") {
    for (const auto& P : small_grid()) {
        if (P.s != 1 || P.W1.is_zero()) continue;
        for (std::size_t n = 0; n <= 12; ++n) CHECK(hq3::higher_w_rec(P, n) == hq3::horadam_w(P, n) / P.W1);
    }
}

TEST_CASE("classical quadratic identities") {
    SUBCASE("examples") {
        const SequenceBasis L2(lucas(2), 10);
        CHECK(hq3::scalar_catalan_w(L2, 3, 2).holds());
        const auto m0 = hq3::scalar_catalan_w(L2, 4, 0);
        CHECK(m0.lhs.is_zero());
        CHECK(m0.rhs.is_zero());
        CHECK(hq3::scalar_docagne_w(L2, 3, 1).holds());
        const auto mn = hq3::scalar_docagne_w(L2, 3, 3);
        CHECK(mn.lhs.is_zero());
        CHECK(mn.rhs.is_zero());
        CHECK(hq3::scalar_catalan_w(lucas(2), 3, 2).holds());
        CHECK(hq3::scalar_docagne_w(lucas(2), 3, 1).holds());
        CHECK_THROWS_AS(hq3::scalar_catalan_w(L2, 1, 2), hq3::InvalidArgument);
        CHECK_THROWS_AS(hq3::scalar_cassini_w(L2, 0), hq3::InvalidArgument);
        // Fibonacci Cassini in its familiar form: U_n^2 - U_{n-1}U_{n+1} = (-1)^{n-1}.
        const SequenceBasis F1(fibonacci(1), 10);
        CHECK(hq3::scalar_cassini_u(F1, 4).lhs == Rational(-1));
    }
    SUBCASE("every small grid point") {
        for (const auto& P : small_grid()) {
            CAPTURE(P.str());
            const SequenceBasis b(P, 2 * 10 + 2);
            for (std::size_t n = 0; n <= 10; ++n) {
                for (std::size_t m = 0; m <= n; ++m) {
                    if (!b.ws_zero()) {
                        CHECK(hq3::scalar_catalan_w(b, n, m).holds());
                        CHECK(hq3::scalar_docagne_w(b, n, m).holds());
                    }
                    if (!b.us_zero()) {
                        CHECK(hq3::scalar_catalan_u(b, n, m).holds());
                        CHECK(hq3::scalar_docagne_u(b, n, m).holds());
                    }
                }
                if (n == 0) continue;
                if (!b.ws_zero()) {
                    CHECK(hq3::scalar_cassini_w(b, n).holds());
                    // Cassini is Catalan at m = 1.
                    CHECK(hq3::scalar_cassini_w(b, n).rhs == hq3::scalar_catalan_w(b, n, 1).rhs);
                }
                if (!b.us_zero()) CHECK(hq3::scalar_cassini_u(b, n).holds());
            }
        }
    }
}

TEST_CASE("summation, generating function and decomposition") {
    CHECK(hq3::scalar_sum_w(lucas(2), 2).holds());
    const auto zero = hq3::scalar_sum_w(lucas(2), 0);
    CHECK(zero.lhs == Rational(2, 3));
    CHECK(zero.rhs == Rational(2, 3));
    // q^s - V_s + 1 = 0 when (p, q) = (3, 2), s = 1.
    CHECK_THROWS_AS(hq3::scalar_sum_w(mersenne(1), 2), hq3::DegenerateDenominator);

    CHECK(hq3::scalar_ogf_check(fibonacci(2), 10));
    CHECK(hq3::scalar_ogf_check(lucas(3), 10));
    CHECK(hq3::scalar_ogf_check(HoradamParams(-2, 3, 1, 2, 2), 2));
    const auto series = hq3::scalar_ogf_sides(SequenceBasis(lucas(2), 6), 6);
    CHECK(series.lhs.size() == 6);
    CHECK(series.lhs[0] == Rational(2, 3));

    for (const auto& P : small_grid()) {
        const SequenceBasis b(P, 16);
        if (b.ws_zero()) continue;
        CHECK(hq3::scalar_ogf_check(b, 15));
        if (!b.sum_den_zero()) {
            for (std::size_t n = 0; n <= 15; ++n) CHECK(hq3::scalar_sum_w(b, n).holds());
        }
        if (b.us_zero()) continue;
        CHECK(hq3::scalar_decompose_sides(b, 0).rhs == b.ws(0));
        CHECK(hq3::scalar_decompose_sides(b, 1).rhs.is_one());
        for (std::size_t n = 0; n <= 15; ++n) CHECK(hq3::scalar_decompose_check(b, n));
    }
}

TEST_CASE("memoized tables agree with fresh evaluation") {
    hq3::SeqCache cache(HoradamParams(-2, 3, 1, -1, 3));
    const HoradamParams& P = cache.params();
    for (std::size_t n : {7u, 0u, 15u, 3u, 15u}) {
        CHECK(cache.w(n) == hq3::horadam_w(P, n));
        CHECK(cache.u(n) == hq3::fib_u(P, n));
        CHECK(cache.v(n) == hq3::lucas_v(P, n));
        CHECK(cache.ws(n) == hq3::higher_w_rec(P, n));
        CHECK(cache.us(n) == hq3::higher_u(P, n));
    }
    const SequenceBasis b(P, 4);
    CHECK_THROWS_AS(b.ws(5), hq3::InvalidArgument);
    CHECK_THROWS_AS(b.apow(11), hq3::InvalidArgument);
}
