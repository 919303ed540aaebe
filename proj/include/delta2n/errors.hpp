#pragma once

#include <stdexcept>
#include <string>

namespace delta2n {

// Raised when a ThetaGraph violates its labelling invariants.
class MalformedGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a computed object contradicts a mathematical invariant
// (d^2 != 0, d_{n+1} not surjective, non-integral multiplicities, ...).
// The CLI maps this to exit status 2.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotACharacter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ProjectionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateVector : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace delta2n
