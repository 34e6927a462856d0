#pragma once

#include <stdexcept>

namespace frz {

// Malformed input: bad residues, mismatched groups, unparsable text.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation (empty set, K < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested universe or enumeration is larger than the build supports.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A documented precondition of the operation does not hold for the input.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace frz
