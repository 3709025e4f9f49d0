#pragma once

// Concrete CAT(0) models: finite-dimensional Euclidean space and the
// Poincare upper half-plane. Everything here is a pure function of values.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "metaprox/errors.hpp"

namespace metaprox::geometry {

/// Smallest admissible ordinate of a half-plane point.
inline constexpr double kMinOrdinate = 1e-12;

struct EuclideanPoint {
  std::vector<double> coords;

  friend bool operator==(const EuclideanPoint&, const EuclideanPoint&) = default;
};

struct HalfPlanePoint {
  double x = 0.0;
  double y = 1.0;

  friend bool operator==(const HalfPlanePoint&, const HalfPlanePoint&) = default;
};

using Point = std::variant<EuclideanPoint, HalfPlanePoint>;

/// Builds a validated half-plane point; throws std::invalid_argument if y < 1e-12
/// or a coordinate is not finite.
Point half_plane(double x, double y);
Point euclidean(std::vector<double> coords);

bool is_half_plane(const Point& p);
const HalfPlanePoint& as_half_plane(const Point& p);
const EuclideanPoint& as_euclidean(const Point& p);

/// Throws if p is not a usable point of its model.
void validate(const Point& p);

/// Throws ModelMismatch unless p and q live in the same model (and dimension).
void require_same_model(const Point& p, const Point& q);

std::string to_string(const Point& p);

// Geodesic lines of the half-plane.
struct Semicircle {
  double a = 0.0;  // center abscissa
  double r = 1.0;  // radius, > 0

  friend bool operator==(const Semicircle&, const Semicircle&) = default;
};

struct VerticalRay {
  double a = 0.0;

  friend bool operator==(const VerticalRay&, const VerticalRay&) = default;
};

using Geodesic = std::variant<Semicircle, VerticalRay>;

Geodesic semicircle(double a, double r);
Geodesic vertical_ray(double a);

std::string to_string(const Geodesic& g);

/// Ordered pair of points, the "vector" from tail to head.
struct VectorPair {
  Point tail;
  Point head;
};

/// ln(x + sqrt(x^2 - 1)) with x clamped to [1, inf).
double arcosh(double x);

double distance(const Point& p, const Point& q);

/// Point at parameter t of the geodesic from p (t = 0) to q (t = 1), so the
/// weight (1 - t) sits on p.
Point combine(const Point& p, const Point& q, double t);

/// <xy, uv> := (d^2(x,v) + d^2(y,u) - d^2(x,u) - d^2(y,v)) / 2.
double quasi_linearization(const VectorPair& v, const VectorPair& w);

/// Nearest-point projection of a half-plane point onto a geodesic line.
Point project(const Point& p, const Geodesic& g);

/// Whether p lies on g, up to an absolute tolerance on the defining equation.
bool on_geodesic(const Point& p, const Geodesic& g, double tol = 1e-9);

}  // namespace metaprox::geometry
