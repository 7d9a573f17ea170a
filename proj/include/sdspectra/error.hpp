#pragma once

#include <stdexcept>
#include <string>

namespace sdspectra {

// Input violates an operation's precondition (bad dimension, out-of-range lambda, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConvergenceError : std::runtime_error {
  int index;
  ConvergenceError(const std::string& what, int idx) : std::runtime_error(what), index(idx) {}
};

// Numerically singular or near-coincident data (nodes, roots, rank-deficient design).
struct ConditioningError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sdspectra
