#pragma once

// Experiment and rate-parameter files.
//
// Both use the same flat text format: one "key = value" per line, dotted
// keys, '#' starts a comment, blank lines ignored. Points are written as
// PREFIX.x / PREFIX.y in the half-plane and PREFIX.coords = c1,c2,... in
// Euclidean space. See docs/config.md for the full key list.

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metaprox/iterations.hpp"
#include "metaprox/rates/rates.hpp"

namespace metaprox::harness {

using geometry::Geodesic;
using geometry::Point;

enum class ModelKind { Euclidean, HalfPlane };
enum class FamilyKind { Projection, Prox, Resolvent, Identity };
/// Base map of a resolvent family.
enum class BaseMapKind { Identity, Constant, Projection };

struct ExperimentConfig {
  ModelKind model = ModelKind::HalfPlane;
  std::size_t dim = 2;  // Euclidean only

  FamilyKind family = FamilyKind::Projection;
  std::optional<Geodesic> target;  // projection family, or projection base map
  std::optional<Point> center;     // prox center, or value of a constant base map
  BaseMapKind base_map = BaseMapKind::Identity;
  double solver_tolerance = operators::kDefaultSolverTolerance;
  std::size_t solver_max_iterations = operators::kDefaultSolverMaxIterations;

  bool weights_reciprocal = true;
  unsigned weights_offset = 2;
  std::vector<double> weights_values;

  bool steps_constant = true;
  double gamma = 1.0;
  std::vector<double> steps_values;

  Point anchor = geometry::half_plane(0.0, 1.0);
  Point start = geometry::half_plane(0.0, 1.0);
  std::size_t num_steps = 0;
  iterations::Variant variant = iterations::Variant::Halpern;
  std::optional<Point> limit;

  operators::OperatorFamily make_family() const;
  /// The base map of a resolvent family.
  operators::Map base() const;
  iterations::WeightScheme weights() const;
  operators::StepSizes steps() const;
  iterations::IterationConfig iteration_config() const;
};

/// Parsed key-value document, in file order.
using KeyValues = std::vector<std::pair<std::string, std::string>>;
KeyValues parse_key_values(std::string_view text);

/// Throws ConfigError on unknown, duplicate, missing or malformed keys.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical text; parse_config(serialize(c)) reproduces c exactly.
std::string serialize(const ExperimentConfig& cfg);

/// The configured limit if present, otherwise the point the iteration is
/// known to converge to: the projection of u onto the common fixed point set.
Point derived_limit(const ExperimentConfig& cfg);

struct ParamsFile {
  rates::RateParams params;
  std::optional<Point> fixed_point;  // p; defaults to the derived limit
};

/// Keys: b, gamma, gamma_upper, alpha_lower, moduli, fixed_point.*.
ParamsFile parse_params(std::string_view text);
ParamsFile load_params(const std::filesystem::path& path);
std::string serialize(const ParamsFile& params);

std::string read_file(const std::filesystem::path& path);

}  // namespace metaprox::harness
