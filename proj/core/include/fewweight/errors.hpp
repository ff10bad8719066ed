#pragma once

#include <stdexcept>
#include <string>

namespace fewweight {

// A caller-supplied parameter violates an operation's precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two computation routes that must agree did not. Always an implementation
// bug, never an input error.
class ConsistencyFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fewweight
