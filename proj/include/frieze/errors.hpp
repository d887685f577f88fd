#ifndef FRIEZE_ERRORS_HPP
#define FRIEZE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frieze {

/// Raised when user-supplied data fails validation (bad arc indices, wrong
/// diagonal count, crossing diagonals, malformed JSON, unrealizable
/// quiddity input, ...).  CLI maps this to exit code 1.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal mathematical invariant that must hold for every
/// valid input is observed to fail (diamond-rule violation on a constructed
/// grid, mutated entry disagreeing with the recomputed one, ...).  Carries a
/// minimal counterexample description.  CLI maps this to exit code 2.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace frieze

#endif  // FRIEZE_ERRORS_HPP
