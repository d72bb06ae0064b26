#pragma once

#include <stdexcept>
#include <string>

namespace dunklkit {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument values (negative multiplicity, y <= 0, dimension mismatch, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Input fails structural validation (e.g. a root set not closed under its reflections).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A quadrature or iteration failed to converge within its budget.
struct NumericFailure : Error {
    double last_estimate = 0.0;
    double previous_estimate = 0.0;
    NumericFailure(const std::string& msg, double prev, double last)
        : Error(msg), last_estimate(last), previous_estimate(prev) {}
};

// An integrand produced NaN/inf at a quadrature node.
struct PoisonedIntegral : Error {
    explicit PoisonedIntegral(const std::string& msg) : Error(msg) {}
};

// Internal consistency assertion failed; indicates a bug, not a user error.
struct InternalPanic : Error {
    explicit InternalPanic(const std::string& msg) : Error(msg) {}
};

// Config file syntax problems, carries position info in the message.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Filesystem problems (unreadable input, unwritable output path).
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace dunklkit
