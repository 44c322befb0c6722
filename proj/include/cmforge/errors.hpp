#pragma once

#include <stdexcept>
#include <string>

namespace cmforge {

// Invalid arguments or violated preconditions.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A reconstructed coefficient was not close enough to an integer.
class IntegralityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Orbit values did not repeat with a common multiplicity.
class MultiplicityMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A prime excluded from the representability criterion (p | nN or p | disc).
class PreconditionExcluded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cmforge
