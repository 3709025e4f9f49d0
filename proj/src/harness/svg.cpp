#include "metaprox/harness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace metaprox::harness {
namespace {

using geometry::Point;

struct Xy {
  double x, y;
};

Xy planar(const Point& p) {
  if (geometry::is_half_plane(p)) {
    const auto& h = geometry::as_half_plane(p);
    return {h.x, h.y};
  }
  const auto& c = geometry::as_euclidean(p).coords;
  if (c.size() != 2) throw std::invalid_argument("plots need planar points");
  return {c[0], c[1]};
}

std::vector<Xy> geodesic_samples(const geometry::Geodesic& g, double top) {
  std::vector<Xy> out;
  if (const auto* s = std::get_if<geometry::Semicircle>(&g)) {
    for (int i = 0; i <= 180; ++i) {
      const double t = std::numbers::pi * i / 180.0;
      out.push_back({s->a + s->r * std::cos(t), s->r * std::sin(t)});
    }
  } else {
    const double a = std::get<geometry::VerticalRay>(g).a;
    out.push_back({a, 0.0});
    out.push_back({a, top});
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<Point>& points, const Point& anchor, const Point& limit,
                       const std::optional<geometry::Geodesic>& target) {
  std::vector<Xy> all;
  for (const auto& p : points) all.push_back(planar(p));
  const Xy u = planar(anchor);
  const Xy lim = planar(limit);
  all.push_back(u);
  all.push_back(lim);

  double x0 = all.front().x, x1 = x0, y0 = all.front().y, y1 = y0;
  for (const auto& p : all) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  std::vector<Xy> curve;
  if (target) {
    curve = geodesic_samples(*target, y1 + 1.0);
    for (const auto& p : curve) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  }
  const double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1.0});
  x0 -= pad;
  x1 += pad;
  y0 -= pad;
  y1 += pad;

  const double width = 480.0;
  const double scale = width / (x1 - x0);
  const double height = (y1 - y0) * scale;
  auto sx = [&](double x) { return (x - x0) * scale; };
  auto sy = [&](double y) { return height - (y - y0) * scale; };

  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (geometry::is_half_plane(limit) && y0 <= 0.0) {
    os << "<line x1=\"0\" y1=\"" << sy(0.0) << "\" x2=\"" << width << "\" y2=\"" << sy(0.0)
       << "\" stroke=\"#999\"/>\n";
  }
  if (!curve.empty()) {
    os << "<polyline fill=\"none\" stroke=\"#2a7\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : curve) os << sx(p.x) << ',' << sy(p.y) << ' ';
    os << "\"/>\n";
  }
  os << "<polyline fill=\"none\" stroke=\"#36c\" stroke-width=\"1\" points=\"";
  for (const auto& p : points) {
    const Xy q = planar(p);
    os << sx(q.x) << ',' << sy(q.y) << ' ';
  }
  os << "\"/>\n";
  for (const auto& p : points) {
    const Xy q = planar(p);
    os << "<circle cx=\"" << sx(q.x) << "\" cy=\"" << sy(q.y) << "\" r=\"2.5\" fill=\"#36c\"/>\n";
  }
  os << "<circle cx=\"" << sx(u.x) << "\" cy=\"" << sy(u.y) << "\" r=\"4\" fill=\"#c33\"/>\n";
  os << "<circle cx=\"" << sx(lim.x) << "\" cy=\"" << sy(lim.y) << "\" r=\"4\" fill=\"#2a7\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace metaprox::harness
