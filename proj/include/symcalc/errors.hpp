#pragma once

#include <stdexcept>
#include <string>

namespace symcalc {

/// Precondition violated by an argument (size mismatch, non-homogeneous input, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A truncated series was asked for information beyond its cap.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Type mismatch while evaluating an expression.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

struct IOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace symcalc
