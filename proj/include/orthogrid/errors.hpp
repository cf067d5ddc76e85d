#pragma once

#include <stdexcept>
#include <string>

namespace orthogrid {

// Precondition or configuration failure (bad input, unsupported dimension).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested search would exceed the configured resource budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical identity that must hold did not. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Operation is not supported for the given size (e.g. canonical form in rank > 4).
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace orthogrid
