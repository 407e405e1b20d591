#pragma once

#include <stdexcept>

namespace umbral {

/// A query beyond the capacity of a sealed table.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Arguments outside the domain where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A mathematical identity that must hold did not. Reaching this is a
/// falsification witness, not a usage error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace umbral
