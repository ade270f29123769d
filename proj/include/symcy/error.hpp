#pragma once

#include <stdexcept>
#include <string>

namespace symcy {

// Base of everything the library throws on bad input or internal misuse.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exactness failures, overflow, modulus mismatch.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

// Mathematically invalid input: a type or datum violating a required condition.
class InvalidTypeError : public Error {
public:
    enum class Kind {
        CySum,          // A != c - (1 + a + b), or amplitude != 0 where required
        Divisibility,   // A does not divide c (or 2c)
        Parity,         // m = 2c/A odd
        Ordering,       // 1 <= a <= b < c violated
        Shape,          // wrong number of weights, non-positive entries
        NotQuasiSmooth, // general member cannot be quasi-smooth
        Series          // Poincare series is not a polynomial for this type
    };

    // The message is prefixed with the kind, e.g. "parity violation: ...".
    InvalidTypeError(Kind kind, const std::string& what)
        : Error(std::string(label(kind)) + ": " + what), kind_(kind) {}

    static const char* label(Kind kind) {
        switch (kind) {
        case Kind::CySum: return "CY-sum violation";
        case Kind::Divisibility: return "divisibility violation";
        case Kind::Parity: return "parity violation";
        case Kind::Ordering: return "ordering violation";
        case Kind::Shape: return "malformed type";
        case Kind::NotQuasiSmooth: return "not quasi-smooth";
        case Kind::Series: return "non-polynomial Poincare series";
        }
        return "invalid type";
    }

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// A secondary argument (divisor, modulus, index) outside its allowed range.
class ArgumentError : public Error {
public:
    using Error::Error;
};

inline const char* to_string(InvalidTypeError::Kind kind) { return InvalidTypeError::label(kind); }

} // namespace symcy
