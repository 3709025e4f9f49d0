#pragma once

// Operator families indexed by a step size, and sampling checkers for the
// firm-nonexpansiveness style inequalities these families satisfy.

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "metaprox/geometry.hpp"

namespace metaprox::operators {

using geometry::Geodesic;
using geometry::Point;

/// A self-map of a model.
using Map = std::function<Point(const Point&)>;

inline constexpr double kDefaultSolverTolerance = 1e-12;
inline constexpr std::size_t kDefaultSolverMaxIterations = 1'000'000;
inline constexpr double kDefaultCheckTolerance = 1e-9;

/// Nearest-point projection onto a fixed geodesic; constant in the step size.
struct ProjectionFamily {
  Geodesic target;
};

/// Resolvent of a nonexpansive map: the fixed point of z -> combine(p, T z, g/(1+g)).
struct ResolventOfNonexpansive {
  Map base;
  double tolerance = kDefaultSolverTolerance;
  std::size_t max_iterations = kDefaultSolverMaxIterations;
};

/// Proximal map of f = d^2(., center)/2.
struct ProxSquaredDistance {
  Point center;
};

/// Every member is the identity. Useful as a degenerate family whose fixed
/// point set is the whole space.
struct IdentityFamily {};

class OperatorFamily {
 public:
  using Variant =
      std::variant<ProjectionFamily, ResolventOfNonexpansive, ProxSquaredDistance, IdentityFamily>;

  OperatorFamily(Variant v) : impl_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  /// Member of order gamma applied to p. Throws std::invalid_argument for
  /// gamma <= 0 and SolverError if a resolvent solve does not converge.
  Point apply(double gamma, const Point& p) const;

  /// The member of order gamma as a plain map.
  Map at(double gamma) const;

  const Variant& variant() const { return impl_; }

 private:
  Variant impl_;
};

OperatorFamily projection_family(Geodesic target);
OperatorFamily resolvent_family(Map base, double tolerance = kDefaultSolverTolerance,
                                std::size_t max_iterations = kDefaultSolverMaxIterations);
OperatorFamily prox_family(Point center);
OperatorFamily identity_family();

/// Same as family.apply(gamma, p).
Point apply_resolvent(const OperatorFamily& family, double gamma, const Point& p);

/// Step sizes (gamma_n) together with a uniform lower bound and a
/// pointwise upper sequence.
class StepSizes {
 public:
  static StepSizes constant(double gamma);
  /// Explicit prefix; indices beyond the list repeat the last entry.
  static StepSizes explicit_list(std::vector<double> values);

  double at(std::size_t n) const;
  double lower() const { return lower_; }
  double upper(std::size_t n) const;
  bool is_constant() const { return values_.size() == 1; }
  const std::vector<double>& values() const { return values_; }

 private:
  StepSizes(std::vector<double> values, double lower);

  std::vector<double> values_;
  double lower_;
};

struct CheckResult {
  bool holds = true;
  double worst_violation = 0.0;  // max over samples of (lhs - rhs), floored at 0
  std::size_t checked = 0;
};

/// 2 d^2(Tx,Ty) <= d^2(x,Ty) + d^2(y,Tx) - d^2(x,Tx) - d^2(y,Ty) on every pair.
CheckResult check_P2(const Map& t, std::span<const std::pair<Point, Point>> samples,
                     double tol = kDefaultCheckTolerance);

/// (lambda, mu)-mutual (P2):
/// (d^2(Tx,Uy) + d^2(y,Uy) - d^2(y,Tx))/mu <= (d^2(x,Uy) - d^2(x,Tx) - d^2(Tx,Uy))/lambda.
CheckResult check_mutually_P2(const Map& t, const Map& u, double lambda, double mu,
                              std::span<const std::pair<Point, Point>> samples,
                              double tol = kDefaultCheckTolerance);

/// d(Tx,Ux) <= |lambda - mu|/lambda d(x,Tx) and d(x,Ux) <= (2 + mu/lambda) d(x,Tx).
CheckResult displacement_bound_check(const Map& t, const Map& u, double lambda, double mu,
                                     std::span<const Point> samples,
                                     double tol = kDefaultCheckTolerance);

/// For p fixed by T: d(z,p) - d(Tz,p) < eps^2/(2b) implies d(z,Tz) < eps.
/// Every sample must satisfy d(z,p) <= b.
CheckResult sqne_modulus_check(const Map& t, const Point& p, double b, double eps,
                               std::span<const Point> samples);

struct QuasinessEvaluation {
  double omega = 0.0;             // eps^2 / (15 b)
  double displacement_gap = 0.0;  // d(z,p) - d(Tz,p)
  double fixed_defect = 0.0;      // d(p,Tp)
  double conclusion = 0.0;        // d(z,Tz)
  bool premises_hold = false;
  bool holds = true;  // vacuously true when a premise fails
};

/// Quantitative quasiness: if d(z,p) - d(Tz,p) <= omega(b,eps) and
/// d(p,Tp) <= omega(b,eps) then d(z,Tz) <= eps. Requires d(z,p) <= b and
/// d(p,Tp) <= b.
QuasinessEvaluation quantitative_quasiness_check(const Map& t, const Point& z, const Point& p,
                                                 double b, double eps,
                                                 double tol = kDefaultCheckTolerance);

}  // namespace metaprox::operators
