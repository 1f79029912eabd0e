#pragma once

#include <stdexcept>
#include <string>

namespace autoflow {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ring description rejected at construction (d not square-free, m <= 0, ...).
struct InvalidSpec : Error {
    using Error::Error;
};

/// Two values from different rings met in one operation.
struct RingMismatch : Error {
    using Error::Error;
};

/// Malformed element, sequence, or ring-spec text.
struct ParseError : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// Operation not defined for this ring kind (e.g. sums of roots of unity).
struct Unsupported : Error {
    using Error::Error;
};

struct NotEmbeddable : Error {
    using Error::Error;
};

/// A truncated series ran out of valid coefficients.
struct OrderExhausted : Error {
    using Error::Error;
};

struct NonzeroConstantTerm : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

/// Inverting a sequence whose leading term is zero (the null space).
struct ZeroLeadingTerm : Error {
    using Error::Error;
};

struct BadRange : Error {
    using Error::Error;
};

/// A solved set failed group closure; signals a solver bug.
struct NotClosed : Error {
    using Error::Error;
};

struct UnsupportedBasePoint : Error {
    using Error::Error;
};

struct UnsupportedKind : Error {
    using Error::Error;
};

} // namespace autoflow
