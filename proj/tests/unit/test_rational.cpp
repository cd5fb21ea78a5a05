#include "hq3/errors.hpp"
#include "hq3/rational.hpp"

#include "../support/oracle.hpp"

#include <doctest.h>

#include <sstream>

using hq3::Rational;

TEST_CASE("parse accepts integers and fractions in any sign") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("0/5").is_zero());
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
}

TEST_CASE("parse rejects malformed text") {
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "2x", " 3", "3 ", "+-1", "1/-2", "--1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), hq3::ParseError);
    }
}

TEST_CASE("construction canonicalizes sign and common factors") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(10, 5).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), hq3::DivisionByZero);
}

TEST_CASE("arithmetic and comparison") {
    const Rational a(1, 2), b(-2, 3);
    CHECK(a + b == Rational(-1, 6));
    CHECK(a - b == Rational(7, 6));
    CHECK(a * b == Rational(-1, 3));
    CHECK(a / b == Rational(-3, 4));
    CHECK(-a == Rational(-1, 2));
    CHECK(b < a);
    CHECK(a.inverse() == Rational(2));
    CHECK(b.abs() == Rational(2, 3));
    CHECK(b.sign() == -1);
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(5).pow(0).is_one());
    CHECK(Rational(3, 4).to_double() == doctest::Approx(0.75));
    CHECK_THROWS_AS(Rational(0).inverse(), hq3::DivisionByZero);
    CHECK_THROWS_AS(a / Rational(0), hq3::DivisionByZero);

    Rational c = a;
    c += b;
    c *= Rational(6);
    c -= Rational(1);
    c /= Rational(2);
    CHECK(c == Rational(-1));

    std::ostringstream os;
    os << Rational(-5, 10);
    CHECK(os.str() == "-1/2");
}

TEST_CASE("results stay in lowest terms with positive denominator") {
    oracle::Random rnd(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const Rational x = rnd.rational(50, 40), y = rnd.rational(50, 40);
        for (const Rational& r : {x + y, x * y, x - y}) {
            CHECK(r.denominator() > 0);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
            CHECK(g == 1);
        }
        // Same values as plain GMP arithmetic.
        CHECK((x * y).raw() == mpq_class(x.raw() * y.raw()));
        CHECK((x + y).raw() == mpq_class(x.raw() + y.raw()));
    }
}
