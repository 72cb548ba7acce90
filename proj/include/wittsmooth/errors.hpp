#pragma once

#include <stdexcept>
#include <string>

namespace wittsmooth {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two operands have different arities (number of variables).
class ArityError : public Error {
public:
    explicit ArityError(const std::string& what) : Error(what) {}
};

/// An index, exponent, or grade is outside its valid range.
class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(what) {}
};

/// Division by zero in exact scalar arithmetic.
class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// An operation was applied to a module handle of the wrong family.
class FamilyError : public Error {
public:
    explicit FamilyError(const std::string& what) : Error(what) {}
};

/// An operation that needs a nonzero vector received zero.
class ZeroVectorError : public Error {
public:
    explicit ZeroVectorError(const std::string& what) : Error(what) {}
};

/// Input data violates a hypothesis the requested computation relies on.
class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& what) : Error(what) {}
};

/// Truncation-window parameters are inconsistent.
class WindowError : public Error {
public:
    explicit WindowError(const std::string& what) : Error(what) {}
};

/// An exact result does not fit inside the requested truncation.
/// Raised instead of silently projecting away the overflow.
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

/// Construction-time consistency check failed (e.g. action matrices
/// that do not satisfy the required bracket relations).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Malformed request at the serialization boundary (CLI, JSON).
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

} // namespace wittsmooth
