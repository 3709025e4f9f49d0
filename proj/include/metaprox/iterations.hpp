#pragma once

// Halpern-type and Tikhonov-type proximal point iterations, and the
// anchored resolvent curve z_t = t u + (1 - t) T z_t.

#include <cstddef>
#include <optional>
#include <vector>

#include "metaprox/operators.hpp"

namespace metaprox::iterations {

using geometry::Point;
using operators::Map;
using operators::OperatorFamily;
using operators::StepSizes;

/// Weights alpha_n in (0, 1].
class WeightScheme {
 public:
  /// alpha_n = 1/(n + offset); offset must be at least 1.
  static WeightScheme reciprocal(unsigned offset);
  static WeightScheme explicit_list(std::vector<double> values);

  /// Throws std::out_of_range past the end of an explicit list.
  double at(std::size_t n) const;
  /// Number of materialized weights, or nullopt for an infinite scheme.
  std::optional<std::size_t> length() const;

  bool is_reciprocal() const { return offset_ != 0; }
  unsigned offset() const { return offset_; }
  const std::vector<double>& values() const { return values_; }

 private:
  WeightScheme() = default;

  unsigned offset_ = 0;
  std::vector<double> values_;
};

enum class Variant { Halpern, Tikhonov };

struct IterationConfig {
  OperatorFamily family;
  StepSizes steps;
  WeightScheme weights;
  Point anchor;
  Point start;
  std::size_t num_steps = 0;
  Variant variant = Variant::Halpern;
};

struct StepDiagnostics {
  double residual = 0.0;  // d(x_n, T_n x_n)
  std::optional<double> to_limit;  // d(x_n, limit)
};

struct Trajectory {
  std::vector<Point> points;             // x_0 ... x_N
  std::vector<StepDiagnostics> diagnostics;  // one per point when requested
};

/// x_{n+1} = combine(u, T_n x_n, 1 - alpha_n).
Trajectory halpern_run(const IterationConfig& cfg);

/// y_{n+1} = T_n(combine(u, y_n, 1 - beta_n)).
Trajectory tikhonov_run(const IterationConfig& cfg);

/// Dispatches on cfg.variant.
Trajectory run(const IterationConfig& cfg);

/// Fills per-point diagnostics: d(x_n, T_n x_n) and, if given, d(x_n, limit).
void attach_diagnostics(Trajectory& traj, const IterationConfig& cfg,
                        const std::optional<Point>& limit);

/// The unique z with z = combine(u, T z, 1 - t), 0 < t < 1, by contraction
/// iteration from z_0 = u.
Point anchored_point(const Map& t_map, const Point& u, double t,
                     double tol = operators::kDefaultSolverTolerance,
                     std::size_t max_iter = operators::kDefaultSolverMaxIterations);

struct CurveInequality {
  double lhs = 0.0;  // <z_t x, z_t u>
  double rhs = 0.0;  // t/2 d^2(x,z_t) + (1-t)^2/(2t) d(x,Tx)(d(x,Tx) + 2 d(x,z_t))
  bool holds = true;
};

/// Evaluates both sides of the resolvent-curve inequality at a point x.
CurveInequality curve_inequality_check(const Map& t_map, const Point& u, double t, const Point& x,
                                       double tol = operators::kDefaultCheckTolerance);

}  // namespace metaprox::iterations
