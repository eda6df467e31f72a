#pragma once

#include <stdexcept>
#include <string>

namespace b2 {

// Precondition or argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// The operation needs an eventually periodic quasi-greedy expansion (or a
// search stayed undecided within its depth limit).
struct UnsupportedBase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A bounded search finished without a result. Not a claim of emptiness.
struct NotFoundWithinBounds : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Case analysis proves that f has no root on the bracket.
struct NoRootByCase : DomainError {
  using DomainError::DomainError;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace b2
