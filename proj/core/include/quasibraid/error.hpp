#pragma once

#include <stdexcept>
#include <string>

namespace quasibraid {

/// Raised for malformed input (bad tokens, out-of-range letters, strand mismatches).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A move was applied to a word that does not have the required syntactic shape.
class MovePreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A bounded computation ran past its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An observation contradicting a published theorem. Only an implementation
/// bug can produce one; callers are expected to dump state and abort.
class TheoremViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace quasibraid
