#pragma once

#include <stdexcept>
#include <string>

namespace tqdh {

// Bad input or unmet precondition (malformed file, failed group/cocycle/action
// validation, action that does not extend, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public std::domain_error {
 public:
  DivisionByZeroError() : std::domain_error("division by zero") {}
};

// Two independent computations of the same object disagree.
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value that the mathematics guarantees was not produced (engine fault).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tqdh
