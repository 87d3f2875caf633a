#pragma once

#include <stdexcept>
#include <string>

namespace contraction {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pair in an edge set is not an edge of the host graph.
struct NonEdgeInF : Error {
  using Error::Error;
};

// A witness block does not induce a connected subgraph.
struct DisconnectedBlock : Error {
  using Error::Error;
};

// A kernel solution refers to non-edges of the kernel graph.
struct InvalidKernelSolution : Error {
  using Error::Error;
};

// An edge set whose quotient is not in the class the caller required.
struct NotASolution : Error {
  using Error::Error;
};

// Exhaustive enumeration would exceed the tractability guard.
struct TooLarge : Error {
  using Error::Error;
};

// An input is below the minimum size an operation needs.
struct TooSmall : Error {
  using Error::Error;
};

// A set cover instance leaves some element uncovered.
struct UncoveredElement : Error {
  using Error::Error;
};

// A colored graph has an empty color class.
struct EmptyColorClass : Error {
  using Error::Error;
};

// The number of color classes does not match the requested clique size.
struct BadColorCount : Error {
  using Error::Error;
};

// The supplied vertex set is not a colorful clique.
struct NotAColorfulClique : Error {
  using Error::Error;
};

// A solution is larger than the budget the extraction guarantee needs.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Malformed instance file. line is 1-based; 0 means "not line-specific".
struct ParseError : Error {
  int line;
  explicit ParseError(const std::string& what, int line_no = 0)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
        line(line_no) {}
};

// A guaranteed internal invariant failed at runtime. Never swallowed:
// the CLI maps this to its own exit code so violations stay visible.
struct AssertionViolation : Error {
  using Error::Error;
};

}  // namespace contraction
