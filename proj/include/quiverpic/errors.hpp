#pragma once

#include <stdexcept>
#include <string>

namespace quiverpic {

// Vector or sign-vector lengths disagree with the quiver.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An argument lies outside the domain of the operation (e.g. a root that is
// not in the wide subcategory, an even block length).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A caller broke a documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal invariant that the mathematics guarantees did not hold.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Boundary matrices whose composite is not zero.
class InvalidComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedDimensionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input (sign strings, weights, exported presentations).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace quiverpic
