#pragma once

#include <stdexcept>
#include <string>

namespace singlehead {

// Raised when a clause spec or test file does not match the expected syntax.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the brute-force analyses when the universe is too large for
// exhaustive enumeration. The message names the operation and its cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& operation, std::size_t universe_size,
                   std::size_t cap)
      : std::runtime_error(operation + ": universe has " +
                           std::to_string(universe_size) +
                           " variables, brute-force enumeration is capped at " +
                           std::to_string(cap)) {}
};

class NotSyntacticallyAcyclicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace singlehead
