#include "metaprox/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace metaprox::operators {
namespace {

using geometry::combine;
using geometry::distance;

double sq(double v) { return v * v; }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Banach iteration for z = combine(p, T z, k) with k = gamma/(1+gamma).
Point solve_resolvent(const ResolventOfNonexpansive& r, double gamma, const Point& p) {
  const double k = gamma / (1.0 + gamma);
  const double stop = r.tolerance / (1.0 + gamma);
  Point z = p;
  for (std::size_t it = 0; it < r.max_iterations; ++it) {
    Point next = combine(p, r.base(z), k);
    const double step = distance(next, z);
    z = std::move(next);
    if (step < stop) return z;
  }
  std::ostringstream os;
  os << "resolvent solve of order " << gamma << " did not converge in " << r.max_iterations
     << " iterations";
  throw SolverError(os.str());
}

void update(CheckResult& result, double excess, double tol) {
  ++result.checked;
  result.worst_violation = std::max(result.worst_violation, excess);
  if (excess > tol) result.holds = false;
}

}  // namespace

Point OperatorFamily::apply(double gamma, const Point& p) const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("step size must be a positive finite number");
  }
  return std::visit(
      Overloaded{
          [&](const ProjectionFamily& f) { return geometry::project(p, f.target); },
          [&](const ResolventOfNonexpansive& f) { return solve_resolvent(f, gamma, p); },
          [&](const ProxSquaredDistance& f) { return combine(p, f.center, gamma / (1.0 + gamma)); },
          [&](const IdentityFamily&) { return p; },
      },
      impl_);
}

Map OperatorFamily::at(double gamma) const {
  return [family = *this, gamma](const Point& p) { return family.apply(gamma, p); };
}

OperatorFamily projection_family(Geodesic target) { return OperatorFamily::Variant(ProjectionFamily{std::move(target)}); }

OperatorFamily resolvent_family(Map base, double tolerance, std::size_t max_iterations) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("solver tolerance must be positive");
  if (max_iterations == 0) throw std::invalid_argument("solver needs at least one iteration");
  return OperatorFamily::Variant(ResolventOfNonexpansive{std::move(base), tolerance, max_iterations});
}

OperatorFamily prox_family(Point center) {
  geometry::validate(center);
  return OperatorFamily::Variant(ProxSquaredDistance{std::move(center)});
}

OperatorFamily identity_family() { return OperatorFamily::Variant(IdentityFamily{}); }

Point apply_resolvent(const OperatorFamily& family, double gamma, const Point& p) {
  return family.apply(gamma, p);
}

StepSizes::StepSizes(std::vector<double> values, double lower)
    : values_(std::move(values)), lower_(lower) {}

StepSizes StepSizes::constant(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("step size must be positive");
  return StepSizes({gamma}, gamma);
}

StepSizes StepSizes::explicit_list(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("step size list is empty");
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("step sizes must be positive");
  }
  const double lower = *std::min_element(values.begin(), values.end());
  return StepSizes(std::move(values), lower);
}

double StepSizes::at(std::size_t n) const { return values_[std::min(n, values_.size() - 1)]; }

double StepSizes::upper(std::size_t n) const {
  // Tightest majorant that dominates every later entry as well.
  const std::size_t from = std::min(n, values_.size() - 1);
  return *std::max_element(values_.begin() + static_cast<std::ptrdiff_t>(from), values_.end());
}

CheckResult check_P2(const Map& t, std::span<const std::pair<Point, Point>> samples, double tol) {
  CheckResult result;
  for (const auto& [x, y] : samples) {
    const Point tx = t(x);
    const Point ty = t(y);
    const double lhs = 2.0 * sq(distance(tx, ty));
    const double rhs =
        sq(distance(x, ty)) + sq(distance(y, tx)) - sq(distance(x, tx)) - sq(distance(y, ty));
    update(result, lhs - rhs, tol);
  }
  return result;
}

CheckResult check_mutually_P2(const Map& t, const Map& u, double lambda, double mu,
                              std::span<const std::pair<Point, Point>> samples, double tol) {
  if (!(lambda > 0.0) || !(mu > 0.0)) throw std::invalid_argument("lambda and mu must be positive");
  CheckResult result;
  for (const auto& [x, y] : samples) {
    const Point tx = t(x);
    const Point uy = u(y);
    const double txuy = sq(distance(tx, uy));
    const double lhs = (txuy + sq(distance(y, uy)) - sq(distance(y, tx))) / mu;
    const double rhs = (sq(distance(x, uy)) - sq(distance(x, tx)) - txuy) / lambda;
    update(result, lhs - rhs, tol);
  }
  return result;
}

CheckResult displacement_bound_check(const Map& t, const Map& u, double lambda, double mu,
                                     std::span<const Point> samples, double tol) {
  if (!(lambda > 0.0) || !(mu > 0.0)) throw std::invalid_argument("lambda and mu must be positive");
  CheckResult result;
  for (const Point& x : samples) {
    const Point tx = t(x);
    const Point ux = u(x);
    const double move_t = distance(x, tx);
    const double gap = distance(tx, ux) - std::abs(lambda - mu) / lambda * move_t;
    const double reach = distance(x, ux) - (2.0 + mu / lambda) * move_t;
    update(result, std::max(gap, reach), tol);
  }
  return result;
}

CheckResult sqne_modulus_check(const Map& t, const Point& p, double b, double eps,
                               std::span<const Point> samples) {
  if (!(b > 0.0) || !(eps > 0.0)) throw std::invalid_argument("b and eps must be positive");
  const double threshold = eps * eps / (2.0 * b);
  CheckResult result;
  for (const Point& z : samples) {
    const double dzp = distance(z, p);
    if (dzp > b) throw std::invalid_argument("sample lies farther than b from the fixed point");
    const Point tz = t(z);
    ++result.checked;
    if (dzp - distance(tz, p) < threshold) {
      const double move = distance(z, tz);
      // strict conclusion d(z,Tz) < eps
      const double excess = move - eps;
      result.worst_violation = std::max(result.worst_violation, std::max(excess, 0.0));
      if (move >= eps) result.holds = false;
    }
  }
  return result;
}

QuasinessEvaluation quantitative_quasiness_check(const Map& t, const Point& z, const Point& p,
                                                 double b, double eps, double tol) {
  if (!(b > 0.0) || !(eps > 0.0)) throw std::invalid_argument("b and eps must be positive");
  QuasinessEvaluation out;
  out.omega = eps * eps / (15.0 * b);
  const Point tz = t(z);
  const Point tp = t(p);
  const double dzp = distance(z, p);
  out.fixed_defect = distance(p, tp);
  if (dzp > b + tol || out.fixed_defect > b + tol) {
    throw std::invalid_argument("quasiness check needs d(z,p) <= b and d(p,Tp) <= b");
  }
  out.displacement_gap = dzp - distance(tz, p);
  out.conclusion = distance(z, tz);
  out.premises_hold = out.displacement_gap <= out.omega && out.fixed_defect <= out.omega;
  out.holds = !out.premises_hold || out.conclusion <= eps + tol;
  return out;
}

}  // namespace metaprox::operators
