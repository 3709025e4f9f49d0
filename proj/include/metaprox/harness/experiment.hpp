#pragma once

#include <vector>

#include "metaprox/harness/config.hpp"
#include "metaprox/harness/csv.hpp"

namespace metaprox::harness {

struct ExperimentResult {
  iterations::Trajectory trajectory;
  Point limit;
  std::vector<Row> rows;  // steps 1..num_steps
  std::size_t dim = 2;
};

/// Runs the configured iteration and tabulates every iterate after the
/// starting point together with its distance to the (derived) limit.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::vector<double> coordinates(const Point& p);

}  // namespace metaprox::harness
