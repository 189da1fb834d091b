#pragma once

#include <stdexcept>
#include <string>

namespace wordmaps {

/// Malformed or out-of-contract input (bad syntax, degree mismatch, ...).
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (evaluation budget, letter cap, group cap) was hit.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A guaranteed invariant failed; this always indicates a bug, never bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace wordmaps
