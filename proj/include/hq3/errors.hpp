#pragma once

#include <stdexcept>
#include <string>

namespace hq3 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

class MismatchedDiscriminant : public Error {
public:
    MismatchedDiscriminant() : Error("quadratic elements live over different discriminants") {}
};

class MismatchedParams : public Error {
public:
    MismatchedParams() : Error("generalized quaternions carry different lambda parameters") {}
};

class DegenerateRoots : public Error {
public:
    DegenerateRoots() : Error("p^2 - 4q = 0: characteristic roots coincide") {}
};

class ZeroRoot : public Error {
public:
    ZeroRoot() : Error("q = 0: a characteristic root vanishes") {}
};

/// A normalizing denominator (W_s or U_s) vanishes, so the sequence is not defined.
class UndefinedSequence : public Error {
public:
    using Error::Error;
};

/// q^s - V_s + 1 = 0; the summation closed form has no meaning.
class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

class UnknownIdentity : public Error {
public:
    explicit UnknownIdentity(const std::string& id) : Error("unknown identity: " + id) {}
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace hq3
