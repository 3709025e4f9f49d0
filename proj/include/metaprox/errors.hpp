#pragma once

#include <stdexcept>
#include <string>

namespace metaprox {

/// Points from different models (or Euclidean points of different
/// dimension) were combined.
class ModelMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A fixed-point solver did not reach its tolerance within the iteration cap.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact rate evaluation ran out of its evaluation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration text, counter-function spec, or CSV.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace metaprox
