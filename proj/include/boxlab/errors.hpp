#pragma once

#include <stdexcept>
#include <string>

namespace boxlab {

// Invalid parameters or malformed input (CLI exit code 1).
struct InvalidInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation would exceed a configured budget (CLI exit code 2).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative solver failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& msg, double residual)
      : std::runtime_error(msg), residual(residual) {}
  double residual;
};

// A desk-scale verification of a mathematical claim failed (CLI exit code 3).
// Distinct from a crash: this is a finding, not a bug.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace boxlab
