#pragma once

#include <stdexcept>

namespace su11 {

// Precondition on a value (parameter range, basis type, margin) violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operands live on different bases or have incompatible shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A spin triple was passed where a hyperbolic one is required, or vice versa.
class KindError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace su11
