#include "hq3/errors.hpp"
#include "hq3/pgq.hpp"
#include "hq3/quad_ext.hpp"

#include "../support/oracle.hpp"

#include <doctest.h>

using hq3::PgqParams;
using hq3::Rational;
using Q = hq3::Pgq<Rational>;

namespace {

Q unit(int r, const PgqParams& l) {
    Rational x[4] = {0, 0, 0, 0};
    x[r] = 1;
    return Q(x[0], x[1], x[2], x[3], l);
}

Q make(long a, long b, long c, long d, const PgqParams& l = {}) { return Q(a, b, c, d, l); }

oracle::Quat to_oracle(const Q& q) { return {{q[0].raw(), q[1].raw(), q[2].raw(), q[3].raw()}}; }

}  // namespace

TEST_CASE("addition, subtraction and scaling") {
    const Q x = make(1, -2, 3, 4);
    CHECK(hq3::pgq_add(x, Q::zero_like(x)) == x);
    CHECK(hq3::pgq_sub(x, x).is_zero());
    CHECK(hq3::pgq_scale(Rational(2), make(1, 1, 0, 0)) == make(2, 2, 0, 0));
    CHECK(-x == make(-1, 2, -3, -4));
}

TEST_CASE("unit products follow the multiplication table") {
    const PgqParams l(2, 3, 5);
    const Q one = unit(0, l), i = unit(1, l), j = unit(2, l), k = unit(3, l);
    CHECK(i * j == Q(0, 0, 0, 2, l));      // l1 k
    CHECK(i * i == Q(-6, 0, 0, 0, l));     // -l1 l2
    CHECK(i * k == Q(0, 0, -3, 0, l));     // -l2 j
    CHECK(j * i == Q(0, 0, 0, -2, l));     // -l1 k
    CHECK(j * j == Q(-10, 0, 0, 0, l));    // -l1 l3
    CHECK(j * k == Q(0, 5, 0, 0, l));      // l3 i
    CHECK(k * i == Q(0, 0, 3, 0, l));      // l2 j
    CHECK(k * j == Q(0, -5, 0, 0, l));     // -l3 i
    CHECK(k * k == Q(-15, 0, 0, 0, l));    // -l2 l3
    CHECK(one * k == k);
    CHECK(k * one == k);
}

TEST_CASE("Hamilton specialization") {
    const PgqParams h;
    const Q i = unit(1, h), j = unit(2, h), k = unit(3, h), m1 = make(-1, 0, 0, 0);
    CHECK(i * j == k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(i * i == m1);
    CHECK(j * j == m1);
    CHECK(k * k == m1);
    CHECK(make(1, 1, 1, 1) * make(1, 1, 1, 1) == make(-2, 2, 2, 2));
    CHECK(hq3::pgq_commutator(i, j) == make(0, 0, 0, 2));
}

TEST_CASE("conjugate and norm") {
    const PgqParams h;
    CHECK(hq3::pgq_conj(make(1, 1, 1, 1)) == make(1, -1, -1, -1));
    CHECK(hq3::pgq_conj(hq3::pgq_conj(make(3, -1, 4, 1))) == make(3, -1, 4, 1));
    CHECK(hq3::pgq_conj(make(7, 0, 0, 0)) == make(7, 0, 0, 0));
    CHECK(hq3::pgq_norm(make(1, 1, 1, 1)) == Rational(4));
    const PgqParams l(Rational(2), Rational(-3), Rational(1, 2));
    CHECK(hq3::pgq_norm(unit(1, l)) == Rational(-6));
    CHECK(hq3::pgq_norm(Q::zero_like(unit(1, l))).is_zero());
    const Q x = make(1, 2, 3, 4, h);
    CHECK(hq3::pgq_commutator(x, x).is_zero());
}

TEST_CASE("mixing lambda parameters throws") {
    const Q a = make(1, 1, 0, 0, PgqParams(1, 1, 1)), b = make(1, 1, 0, 0, PgqParams(1, 2, 1));
    CHECK_THROWS_AS(a * b, hq3::MismatchedParams);
    CHECK_THROWS_AS(a + b, hq3::MismatchedParams);
    CHECK_FALSE(a == b);
    // Equal values in separately built parameter sets are compatible.
    CHECK(make(1, 0, 0, 0, PgqParams(1, 2, 1)) * b == b);
}

TEST_CASE("algebra laws over random lambda") {
    oracle::Random rnd(3);
    for (int g = 0; g < 25; ++g) {
        const PgqParams l = rnd.lambda();
        CAPTURE(l.str());
        for (int trial = 0; trial < 80; ++trial) {
            const Q P = rnd.quat(l), R = rnd.quat(l), S = rnd.quat(l);
            CHECK((P * R) * S == P * (R * S));
            CHECK(hq3::pgq_conj(P * R) == hq3::pgq_conj(R) * hq3::pgq_conj(P));
            CHECK(hq3::pgq_norm(P * R) == hq3::pgq_norm(P) * hq3::pgq_norm(R));
            const Q PP = P * hq3::pgq_conj(P);
            CHECK(PP[1].is_zero());
            CHECK(PP[2].is_zero());
            CHECK(PP[3].is_zero());
            CHECK(PP[0] == hq3::pgq_norm(P));
            CHECK(oracle::same(P * R, oracle::mul(to_oracle(P), to_oracle(R), l.l1().raw(), l.l2().raw(), l.l3().raw())));
            CHECK(P * (R + S) == P * R + P * S);
        }
    }
}

TEST_CASE("coefficients over Q(sqrt D)") {
    const auto roots = hq3::embed_roots(1, -1);
    using K = hq3::Pgq<hq3::QuadExt>;
    const PgqParams h;
    const K a(hq3::QuadExt(1), roots.alpha, roots.alpha.pow(2), roots.alpha.pow(3), h);
    const K b(hq3::QuadExt(1), roots.beta, roots.beta.pow(2), roots.beta.pow(3), h);
    CHECK(hq3::pgq_conj(a * b) == hq3::pgq_conj(b) * hq3::pgq_conj(a));
    CHECK(hq3::pgq_norm(a * b) == hq3::pgq_norm(a) * hq3::pgq_norm(b));
    const K c = hq3::pgq_cast<hq3::QuadExt>(make(1, 2, 3, 4));
    CHECK(c[3] == hq3::QuadExt(4));
    CHECK(K::scalar(roots.alpha, h)[0] == roots.alpha);
}
