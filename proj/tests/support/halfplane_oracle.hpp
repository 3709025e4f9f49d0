#pragma once

#include <cmath>
#include <utility>

namespace metaprox::testing {

// Geodesic point at parameter t from (x0,y0) to (x1,y1), written with the
// unit-speed parametrizations of the two kinds of half-plane geodesics:
// vertical lines y = y0 e^s, and semicircles (a + r tanh s, r / cosh s).
inline std::pair<double, double> oracle_combine(double x0, double y0, double x1, double y1,
                                                double t) {
  if (std::abs(x1 - x0) < 1e-14) {
    return {x0, y0 * std::pow(y1 / y0, t)};
  }
  const double a = ((x1 * x1 + y1 * y1) - (x0 * x0 + y0 * y0)) / (2.0 * (x1 - x0));
  const double r = std::hypot(x0 - a, y0);
  const double s0 = std::atanh((x0 - a) / r);
  const double s1 = std::atanh((x1 - a) / r);
  const double s = (1.0 - t) * s0 + t * s1;
  return {a + r * std::tanh(s), r / std::cosh(s)};
}

inline double oracle_distance(double x0, double y0, double x1, double y1) {
  const double dx = x1 - x0, dy = y1 - y0;
  return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * y0 * y1));
}

}  // namespace metaprox::testing
