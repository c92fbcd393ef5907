#pragma once

#include <stdexcept>
#include <string>

namespace crossnest {

// Raised for every rejected input: malformed permutations, invalid diagrams,
// broken tableau preconditions, out-of-range sizes.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an internal consistency check of a pipeline fails. Never
// expected on valid input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace crossnest
