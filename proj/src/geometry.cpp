#include "metaprox/geometry.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace metaprox::geometry {
namespace {

// Light-cone coordinates of the hyperboloid image of (x, y):
// (X0 - X1, X0 + X1, X2) = (1/y, (x^2 + y^2)/y, x/y). The geodesic formula is
// linear in the embedding, so interpolating these is the same as
// interpolating (X0, X1, X2) while avoiding the X0 - X1 cancellation on the
// way back.
struct Hyperboloid {
  double minus;  // X0 - X1
  double plus;   // X0 + X1
  double lateral;  // X2
};

Hyperboloid embed(const HalfPlanePoint& p) {
  return {1.0 / p.y, (p.x * p.x + p.y * p.y) / p.y, p.x / p.y};
}

HalfPlanePoint unembed(const Hyperboloid& h) {
  const double y = 1.0 / h.minus;
  return {h.lateral * y, y};
}

// arcosh(1 + q) for q >= 0, written through q to keep precision for close
// points.
double arcosh_1p(double q) {
  if (!(q > 0.0)) return 0.0;
  return std::log1p(q + std::sqrt(q * (q + 2.0)));
}

double half_plane_distance(const HalfPlanePoint& p, const HalfPlanePoint& q) {
  if (p == q) return 0.0;
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  return arcosh_1p((dx * dx + dy * dy) / (2.0 * p.y * q.y));
}

double euclidean_distance(const EuclideanPoint& p, const EuclideanPoint& q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    const double d = p.coords[i] - q.coords[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

// sinh(s*d)/sinh(d) for s in [0,1], stable for large d.
double sinh_ratio(double s, double d) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  return std::exp(-(1.0 - s) * d) * std::expm1(-2.0 * s * d) / std::expm1(-2.0 * d);
}

HalfPlanePoint half_plane_combine(const HalfPlanePoint& p, const HalfPlanePoint& q,
                                  double t) {
  const double d = half_plane_distance(p, q);
  if (d == 0.0) return p;
  const double wp = sinh_ratio(1.0 - t, d);
  const double wq = sinh_ratio(t, d);
  const Hyperboloid hp = embed(p);
  const Hyperboloid hq = embed(q);
  return unembed({wp * hp.minus + wq * hq.minus, wp * hp.plus + wq * hq.plus,
                  wp * hp.lateral + wq * hq.lateral});
}

}  // namespace

Point half_plane(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw std::invalid_argument("half-plane point has a non-finite coordinate");
  }
  if (!(y >= kMinOrdinate)) {
    std::ostringstream os;
    os << "half-plane point (" << x << ", " << y << ") is not above the real axis";
    throw std::invalid_argument(os.str());
  }
  return HalfPlanePoint{x, y};
}

Point euclidean(std::vector<double> coords) {
  if (coords.empty()) throw std::invalid_argument("euclidean point needs at least one coordinate");
  for (double c : coords) {
    if (!std::isfinite(c)) throw std::invalid_argument("euclidean point has a non-finite coordinate");
  }
  return EuclideanPoint{std::move(coords)};
}

bool is_half_plane(const Point& p) { return std::holds_alternative<HalfPlanePoint>(p); }

const HalfPlanePoint& as_half_plane(const Point& p) {
  if (const auto* h = std::get_if<HalfPlanePoint>(&p)) return *h;
  throw ModelMismatch("expected a half-plane point");
}

const EuclideanPoint& as_euclidean(const Point& p) {
  if (const auto* e = std::get_if<EuclideanPoint>(&p)) return *e;
  throw ModelMismatch("expected a Euclidean point");
}

void validate(const Point& p) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HalfPlanePoint>) {
          (void)half_plane(v.x, v.y);
        } else {
          (void)euclidean(v.coords);
        }
      },
      p);
}

void require_same_model(const Point& p, const Point& q) {
  if (p.index() != q.index()) throw ModelMismatch("points belong to different models");
  if (const auto* e = std::get_if<EuclideanPoint>(&p)) {
    if (e->coords.size() != std::get<EuclideanPoint>(q).coords.size()) {
      throw ModelMismatch("Euclidean points have different dimensions");
    }
  }
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os.precision(17);
  if (const auto* h = std::get_if<HalfPlanePoint>(&p)) {
    os << "(" << h->x << ", " << h->y << ")";
  } else {
    const auto& c = std::get<EuclideanPoint>(p).coords;
    os << "[";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
    os << "]";
  }
  return os.str();
}

Geodesic semicircle(double a, double r) {
  if (!std::isfinite(a) || !std::isfinite(r) || !(r > 0.0)) {
    throw std::invalid_argument("semicircle needs a finite center and a positive radius");
  }
  return Semicircle{a, r};
}

Geodesic vertical_ray(double a) {
  if (!std::isfinite(a)) throw std::invalid_argument("vertical ray needs a finite abscissa");
  return VerticalRay{a};
}

std::string to_string(const Geodesic& g) {
  std::ostringstream os;
  if (const auto* s = std::get_if<Semicircle>(&g)) {
    os << "C(" << s->a << ", " << s->r << ")";
  } else {
    os << "R(" << std::get<VerticalRay>(g).a << ")";
  }
  return os.str();
}

double arcosh(double x) {
  x = std::max(x, 1.0);
  return std::log(x + std::sqrt(x * x - 1.0));
}

double distance(const Point& p, const Point& q) {
  require_same_model(p, q);
  if (const auto* hp = std::get_if<HalfPlanePoint>(&p)) {
    return half_plane_distance(*hp, std::get<HalfPlanePoint>(q));
  }
  return euclidean_distance(std::get<EuclideanPoint>(p), std::get<EuclideanPoint>(q));
}

Point combine(const Point& p, const Point& q, double t) {
  require_same_model(p, q);
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("combine: t must lie in [0, 1]");
  if (t == 0.0) return p;
  if (t == 1.0) return q;
  if (const auto* hp = std::get_if<HalfPlanePoint>(&p)) {
    return half_plane_combine(*hp, std::get<HalfPlanePoint>(q), t);
  }
  const auto& a = std::get<EuclideanPoint>(p).coords;
  const auto& b = std::get<EuclideanPoint>(q).coords;
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (1.0 - t) * a[i] + t * b[i];
  return EuclideanPoint{std::move(out)};
}

double quasi_linearization(const VectorPair& v, const VectorPair& w) {
  const Point& x = v.tail;
  const Point& y = v.head;
  const Point& u = w.tail;
  const Point& z = w.head;
  auto sq = [](double d) { return d * d; };
  return 0.5 * (sq(distance(x, z)) + sq(distance(y, u)) - sq(distance(x, u)) -
                sq(distance(y, z)));
}

Point project(const Point& p, const Geodesic& g) {
  const HalfPlanePoint& h = as_half_plane(p);
  validate(p);
  if (const auto* ray = std::get_if<VerticalRay>(&g)) {
    // Geodesics orthogonal to the ray x = a are the semicircles centred at (a, 0).
    return HalfPlanePoint{ray->a, std::hypot(h.x - ray->a, h.y)};
  }
  // Send the semicircle to the imaginary axis with z -> (z - lo)/(hi - z),
  // project there, and map back with w -> (hi w + lo)/(w + 1).
  const auto& circle = std::get<Semicircle>(g);
  const double lo = circle.a - circle.r;
  const double hi = circle.a + circle.r;
  const std::complex<double> z{h.x, h.y};
  const std::complex<double> image = (z - lo) / (hi - z);
  const std::complex<double> foot{0.0, std::abs(image)};
  const std::complex<double> back = (hi * foot + lo) / (foot + 1.0);
  return HalfPlanePoint{back.real(), back.imag()};
}

bool on_geodesic(const Point& p, const Geodesic& g, double tol) {
  const HalfPlanePoint& h = as_half_plane(p);
  if (const auto* ray = std::get_if<VerticalRay>(&g)) return std::abs(h.x - ray->a) <= tol;
  const auto& circle = std::get<Semicircle>(g);
  return std::abs(std::hypot(h.x - circle.a, h.y) - circle.r) <= tol;
}

}  // namespace metaprox::geometry
