#pragma once

#include <stdexcept>
#include <string>

namespace sympair {

// Input document is malformed or describes an invalid object: bad JSON,
// missing fields, an invalid Cartan matrix, an invalid involution matrix,
// a dimension mismatch.  The CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An enumeration or search would exceed (or has exceeded) the caller's
// budget.  The message carries the exact or estimated cost so the caller
// can decide whether to retry with a larger budget.  CLI exit code 3.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input is well formed but violates a semantic precondition of the
// requested operation: a non-dominant character where dominance is
// required, a Weyl element that is not a twisted involution, a target
// vector outside the root span, a non-involutive oracle permutation.
// CLI exit code 4.
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Violation of an internal invariant that no valid input can trigger.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace sympair
