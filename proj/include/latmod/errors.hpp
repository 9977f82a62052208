#pragma once

#include <stdexcept>
#include <string>

namespace latmod {

// Base for malformed user input (bad lattice presentation, unknown labels,
// inadmissible model data). The CLI maps these to exit code 3.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotALattice : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DuplicateLabel : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownLabel : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidArrow : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotATransferSystem : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotAdmissible : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotShort : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Raised when a computation contradicts a structural guarantee the library
// relies on (a closure failing to converge, a maximal system that is not
// closed, a localization landing outside the enumerated structures).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class MaximalityViolation : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace latmod
