#include "hq3/rational.hpp"

#include "hq3/errors.hpp"

#include <ostream>

namespace hq3 {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long n, long d) {
    if (d == 0) throw DivisionByZero();
    v_ = mpq_class(n, 1);
    v_ /= d;
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (sgn(v_.get_den()) == 0) throw DivisionByZero();
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Rational Rational::pow(std::uint64_t e) const {
    Rational result(1);
    Rational base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

std::string Rational::str() const { return v_.get_str(10); }

Rational& Rational::operator+=(const Rational& o) {
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.v_.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.v_.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.v_.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    Rational r;
    mpq_div(r.v_.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return r;
}

Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), a.v_.get_mpq_t());
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hq3
