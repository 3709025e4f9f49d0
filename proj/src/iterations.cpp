#include "metaprox/iterations.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace metaprox::iterations {
namespace {

using geometry::combine;
using geometry::distance;

void check_endpoints(const IterationConfig& cfg) {
  geometry::validate(cfg.anchor);
  geometry::validate(cfg.start);
  geometry::require_same_model(cfg.anchor, cfg.start);
}

}  // namespace

WeightScheme WeightScheme::reciprocal(unsigned offset) {
  if (offset == 0) throw std::invalid_argument("reciprocal weights need offset >= 1");
  WeightScheme w;
  w.offset_ = offset;
  return w;
}

WeightScheme WeightScheme::explicit_list(std::vector<double> values) {
  for (double v : values) {
    if (!(v > 0.0 && v <= 1.0)) throw std::invalid_argument("weights must lie in (0, 1]");
  }
  WeightScheme w;
  w.values_ = std::move(values);
  return w;
}

double WeightScheme::at(std::size_t n) const {
  if (offset_ != 0) return 1.0 / (static_cast<double>(n) + offset_);
  if (n >= values_.size()) {
    std::ostringstream os;
    os << "weight index " << n << " is past the " << values_.size() << " explicit weights";
    throw std::out_of_range(os.str());
  }
  return values_[n];
}

std::optional<std::size_t> WeightScheme::length() const {
  if (offset_ != 0) return std::nullopt;
  return values_.size();
}

Trajectory halpern_run(const IterationConfig& cfg) {
  check_endpoints(cfg);
  Trajectory traj;
  traj.points.reserve(cfg.num_steps + 1);
  traj.points.push_back(cfg.start);
  for (std::size_t n = 0; n < cfg.num_steps; ++n) {
    const Point image = cfg.family.apply(cfg.steps.at(n), traj.points.back());
    traj.points.push_back(combine(cfg.anchor, image, 1.0 - cfg.weights.at(n)));
  }
  return traj;
}

Trajectory tikhonov_run(const IterationConfig& cfg) {
  check_endpoints(cfg);
  Trajectory traj;
  traj.points.reserve(cfg.num_steps + 1);
  traj.points.push_back(cfg.start);
  for (std::size_t n = 0; n < cfg.num_steps; ++n) {
    const Point anchored = combine(cfg.anchor, traj.points.back(), 1.0 - cfg.weights.at(n));
    traj.points.push_back(cfg.family.apply(cfg.steps.at(n), anchored));
  }
  return traj;
}

Trajectory run(const IterationConfig& cfg) {
  return cfg.variant == Variant::Halpern ? halpern_run(cfg) : tikhonov_run(cfg);
}

void attach_diagnostics(Trajectory& traj, const IterationConfig& cfg,
                        const std::optional<Point>& limit) {
  traj.diagnostics.clear();
  traj.diagnostics.reserve(traj.points.size());
  for (std::size_t n = 0; n < traj.points.size(); ++n) {
    const Point& x = traj.points[n];
    StepDiagnostics d;
    d.residual = distance(x, cfg.family.apply(cfg.steps.at(n), x));
    if (limit) d.to_limit = distance(x, *limit);
    traj.diagnostics.push_back(d);
  }
}

Point anchored_point(const Map& t_map, const Point& u, double t, double tol,
                     std::size_t max_iter) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("anchored_point needs 0 < t < 1");
  geometry::validate(u);
  // Contraction factor 1 - t: the residual after a step is at most
  // (1 - t) times the step length.
  const double stop = tol;
  Point z = u;
  for (std::size_t it = 0; it < max_iter; ++it) {
    Point next = combine(u, t_map(z), 1.0 - t);
    const double step = distance(next, z);
    z = std::move(next);
    if (step <= stop) return z;
  }
  std::ostringstream os;
  os << "anchored point for t = " << t << " did not converge in " << max_iter << " iterations";
  throw SolverError(os.str());
}

CurveInequality curve_inequality_check(const Map& t_map, const Point& u, double t, const Point& x,
                                       double tol) {
  const Point z = anchored_point(t_map, u, t);
  const double move = distance(x, t_map(x));
  const double dxz = distance(x, z);
  CurveInequality out;
  out.lhs = geometry::quasi_linearization({z, x}, {z, u});
  out.rhs = 0.5 * t * dxz * dxz + (1.0 - t) * (1.0 - t) / (2.0 * t) * move * (move + 2.0 * dxz);
  out.holds = out.lhs <= out.rhs + tol;
  return out;
}

}  // namespace metaprox::iterations
