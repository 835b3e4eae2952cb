#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgqc {

/// Base class for all library errors. Each concrete category maps to a
/// stable CLI exit code (see tools/).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands bound to different field specs or skew rings.
class SpecMismatchError : public Error {
public:
    using Error::Error;
};

/// A configured size bound was exceeded (field enumeration, q > 512, ...).
class SizeError : public Error {
public:
    using Error::Error;
};

/// Inversion of a non-unit ring element. Carries which CRT component
/// vanishes in the message.
class NonUnitError : public Error {
public:
    using Error::Error;
};

/// Division by zero or by a polynomial with non-unit leading coefficient.
class DivisionError : public Error {
public:
    using Error::Error;
};

/// A Euclidean chain over S hit a non-unit leading coefficient; callers
/// may fall back to CRT-componentwise computation.
class EuclideanChainError : public Error {
public:
    using Error::Error;
};

/// Text syntax error; `position` is the byte offset in the input.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// Code-spec document violates the schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A generator was required to right-divide x^n - 1 and does not; the
/// message carries the nonzero remainder.
class DivisorError : public Error {
public:
    using Error::Error;
};

/// A theorem's hypothesis is violated; the formula is not asserted.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Enumeration would exceed the configured budget; `required` is the
/// number of operations the refused computation needs.
class BudgetError : public Error {
public:
    BudgetError(const std::string& msg, std::uint64_t req)
        : Error(msg + " (required budget: " + std::to_string(req) + ")"), required(req) {}
    std::uint64_t required;
};

/// No idempotent generator was found within the search.
class IdempotentError : public Error {
public:
    using Error::Error;
};

/// A generator ledger violates the requested triangular-form conventions.
class ConventionError : public Error {
public:
    using Error::Error;
};

} // namespace sgqc
