#pragma once

#include <stdexcept>

namespace rca {

// Configuration is not confined to the requested diagonal sublattice.
class MixedParityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// C3 and C3' are not additive and have no transition polynomial.
class NonlinearRuleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IndexOutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An internal cross-relation between sequences failed. Indicates a bug.
class RelationViolationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed text interchange input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rca
