#pragma once

#include <stdexcept>
#include <string>

namespace ramseylab {

// Base of every library error. The CLI maps each subclass to an exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad arguments: parameter out of range, malformed input structure, etc.
struct InvalidArgument : Error {
  using Error::Error;
};

// Text decoding failures (graph6, coloring files).
struct ParseError : Error {
  using Error::Error;
};

// A coloring that does not color exactly the edges of its host.
struct DomainMismatch : Error {
  using Error::Error;
};

// A search ran out of its node budget; the answer is unknown.
struct BudgetExhausted : Error {
  explicit BudgetExhausted(const std::string& what, long long nodes = 0)
      : Error(what), nodes_explored(nodes) {}
  long long nodes_explored;
};

// A checked postcondition failed. Seeing one means a bug.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace ramseylab
