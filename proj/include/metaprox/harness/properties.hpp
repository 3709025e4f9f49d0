#pragma once

// Randomized property suites over the geometry, operator, iteration and rate
// layers. Each property reports the number of samples it examined and the
// worst excess of its left-hand side over its right-hand side.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "metaprox/geometry.hpp"

namespace metaprox::harness {

using DistanceFn = std::function<double(const geometry::Point&, const geometry::Point&)>;

struct PropertyResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  double worst = 0.0;  // max excess, floored at 0
  double tolerance = 0.0;

  bool skipped() const { return samples == 0; }
  bool passed() const { return failures == 0; }
  void record(double excess);
};

struct SuiteReport {
  std::string name;
  std::vector<PropertyResult> properties;

  bool passed() const;
  /// True when no property examined a single sample.
  bool skipped() const;
  const PropertyResult* find(const std::string& property) const;
};

struct SuiteOptions {
  std::size_t samples = 10'000;
  std::uint64_t seed = 0x5eed;
  DistanceFn distance;  // defaults to geometry::distance when empty
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  std::size_t index(std::size_t lo, std::size_t hi);  // inclusive
  /// x in [-8, 8], log y in [-2, 2].
  geometry::Point half_plane();
  geometry::Point euclidean(std::size_t dim, double radius = 1.0);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// CAT(0) inequality, geodesic law, Busemann convexity, the squared-distance
/// expansion along a geodesic, the three-point bound with radius b, the four
/// quasi-linearization identities, Cauchy-Schwarz, and the Euclidean
/// quasi-linearization/dot product agreement (on samples/10 draws).
SuiteReport geometry_suite(const SuiteOptions& opts);

/// (P2) for projections and prox maps, mutual (P2) and displacement bounds
/// for the prox family, joint firm nonexpansiveness, nonexpansiveness, the
/// rotation counterexample, the fixed-point modulus and quantitative
/// quasiness.
SuiteReport operator_suite(const SuiteOptions& opts);

/// Boundedness, residual identity, Halpern/Tikhonov consistency, and the
/// resolvent-curve inequality.
SuiteReport iteration_suite(const SuiteOptions& opts);

/// Preset modulus correctness and Phi pipeline invariants.
SuiteReport rates_suite(const SuiteOptions& opts);

/// Window conclusions of the monotone convergence bound and of the
/// recurrence lemma, verified by brute force on synthetic sequences.
SuiteReport lemma_suite(const SuiteOptions& opts);

}  // namespace metaprox::harness
