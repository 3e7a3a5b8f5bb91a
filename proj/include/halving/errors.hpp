#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace halving {

/// Validation errors are caused by bad input; internal errors mean an
/// invariant the library relies on was broken.
enum class ErrorClass { validation, internal };

/// Base of every error thrown by the library. `code()` is a stable,
/// machine-parsable identifier such as "NotRealizable".
class Error : public std::runtime_error {
public:
    Error(std::string code, ErrorClass cls, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)), class_(cls) {}

    const std::string& code() const noexcept { return code_; }
    ErrorClass error_class() const noexcept { return class_; }

private:
    std::string code_;
    ErrorClass class_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& detail)
        : Error("InvalidArgument", ErrorClass::validation, detail) {}
};

/// A fixed-point sequence whose Möbius inversion is negative or non-integral.
class NotRealizable : public Error {
public:
    NotRealizable(std::size_t index, const std::string& witness)
        : Error("NotRealizable", ErrorClass::validation,
                "index " + std::to_string(index) + ": " + witness),
          index_(index), witness_(witness) {}

    std::size_t index() const noexcept { return index_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::size_t index_;
    std::string witness_;
};

class HorizonMismatch : public Error {
public:
    explicit HorizonMismatch(const std::string& detail)
        : Error("HorizonMismatch", ErrorClass::validation, detail) {}
};

class HorizonTooSmall : public Error {
public:
    explicit HorizonTooSmall(const std::string& detail)
        : Error("HorizonTooSmall", ErrorClass::validation, detail) {}
};

class HypothesisViolated : public Error {
public:
    HypothesisViolated(std::size_t index, std::string hypothesis)
        : Error("HypothesisViolated", ErrorClass::validation,
                "index " + std::to_string(index) + ": " + hypothesis),
          index_(index), hypothesis_(std::move(hypothesis)) {}

    std::size_t index() const noexcept { return index_; }
    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::size_t index_;
    std::string hypothesis_;
};

class EmptyFixedPoint : public Error {
public:
    EmptyFixedPoint()
        : Error("EmptyFixedPoint", ErrorClass::validation,
                "the surviving fixed-point count s_1 must be at least 1") {}
};

class TooFewCoefficients : public Error {
public:
    explicit TooFewCoefficients(const std::string& detail)
        : Error("TooFewCoefficients", ErrorClass::validation, detail) {}
};

/// Thrown when a result the mathematics guarantees fails to materialize.
class InternalError : public Error {
public:
    InternalError(std::string code, const std::string& detail)
        : Error(std::move(code), ErrorClass::internal, detail) {}
};

} // namespace halving
