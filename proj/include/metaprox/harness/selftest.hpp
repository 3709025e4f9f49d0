#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "metaprox/harness/properties.hpp"

namespace metaprox::harness {

struct SelftestOptions {
  std::size_t samples = 10'000;
  std::uint64_t seed = 0x5eed;
  /// Replaces the half-plane distance by arcosh(.) + 1e-6 in the geometry suite.
  bool inject_fault = false;
};

enum class SelftestStatus { Passed, Failed, Skipped };

struct SelftestReport {
  std::vector<SuiteReport> suites;

  /// Failed if any suite failed, Skipped if every suite was skipped.
  SelftestStatus status() const;
};

/// Half-plane distance with an additive perturbation, for mutation testing.
DistanceFn perturbed_distance(double delta);

/// Both iteration tables of the half-plane experiments, compared cell by
/// cell with the published values at tolerance 1e-4. Skipped when samples is 0.
SuiteReport golden_suite(std::size_t samples);

SelftestReport run_selftest(const SelftestOptions& opts);

/// One line per property, then one summary line.
std::string format(const SelftestReport& report);

}  // namespace metaprox::harness
