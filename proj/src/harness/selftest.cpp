#include "metaprox/harness/selftest.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "metaprox/harness/experiment.hpp"

namespace metaprox::harness {
namespace {

struct GoldenRow {
  double x, y, dist;
};

constexpr std::array<GoldenRow, 7> kSemicircleTable = {{
    {4.354121, 2.781410, 0.520238},
    {4.291735, 2.338587, 0.347794},
    {4.245949, 2.144022, 0.259202},
    {4.216943, 2.036748, 0.206300},
    {4.197234, 1.969076, 0.171248},
    {4.182998, 1.922578, 0.146342},
    {4.172229, 1.888697, 0.127743},
}};

constexpr std::array<GoldenRow, 7> kRayTable = {{
    {1.270813, 3.311767, 0.473128},
    {1.546908, 2.889523, 0.311565},
    {1.677895, 2.702947, 0.230210},
    {1.751232, 2.597757, 0.181888},
    {1.797667, 2.530419, 0.150019},
    {1.829597, 2.483720, 0.127473},
    {1.852865, 2.449490, 0.110707},
}};

ExperimentConfig half_plane_experiment(geometry::Geodesic target, Point anchor) {
  ExperimentConfig cfg;
  cfg.model = ModelKind::HalfPlane;
  cfg.family = FamilyKind::Projection;
  cfg.target = target;
  cfg.weights_reciprocal = true;
  cfg.weights_offset = 2;
  cfg.steps_constant = true;
  cfg.gamma = 1.0;
  cfg.anchor = anchor;
  cfg.start = geometry::half_plane(4.0, 5.0);
  cfg.num_steps = 7;
  return cfg;
}

PropertyResult compare(const std::string& name, const ExperimentConfig& cfg,
                       const std::array<GoldenRow, 7>& table) {
  PropertyResult r;
  r.name = name;
  r.tolerance = 1e-4;
  const auto result = run_experiment(cfg);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& row = result.rows.at(i);
    r.record(std::abs(row.coords[0] - table[i].x));
    r.record(std::abs(row.coords[1] - table[i].y));
    r.record(std::abs(row.dist_to_limit - table[i].dist));
  }
  return r;
}

}  // namespace

DistanceFn perturbed_distance(double delta) {
  return [delta](const Point& p, const Point& q) {
    if (!geometry::is_half_plane(p)) return geometry::distance(p, q);
    const auto& a = geometry::as_half_plane(p);
    const auto& b = geometry::as_half_plane(q);
    const double dx = a.x - b.x, dy = a.y - b.y;
    return geometry::arcosh(1.0 + (dx * dx + dy * dy) / (2.0 * a.y * b.y)) + delta;
  };
}

SuiteReport golden_suite(std::size_t samples) {
  if (samples == 0) {
    PropertyResult a, b;
    a.name = "semicircle_table";
    b.name = "ray_table";
    return {"golden", {a, b}};
  }
  return {"golden",
          {compare("semicircle_table",
                   half_plane_experiment(geometry::semicircle(3.0, 2.0), geometry::half_plane(6.0, 3.0)),
                   kSemicircleTable),
           compare("ray_table",
                   half_plane_experiment(geometry::vertical_ray(2.0), geometry::half_plane(1.0, 2.0)),
                   kRayTable)}};
}

SelftestStatus SelftestReport::status() const {
  bool all_skipped = true;
  for (const auto& s : suites) {
    if (!s.passed()) return SelftestStatus::Failed;
    all_skipped = all_skipped && s.skipped();
  }
  return all_skipped ? SelftestStatus::Skipped : SelftestStatus::Passed;
}

SelftestReport run_selftest(const SelftestOptions& opts) {
  SuiteOptions so;
  so.samples = opts.samples;
  so.seed = opts.seed;
  SuiteOptions geometry_opts = so;
  if (opts.inject_fault) geometry_opts.distance = perturbed_distance(1e-6);

  SelftestReport report;
  report.suites.push_back(geometry_suite(geometry_opts));
  report.suites.push_back(operator_suite(so));
  report.suites.push_back(iteration_suite(so));
  report.suites.push_back(rates_suite(so));
  report.suites.push_back(lemma_suite(so));
  report.suites.push_back(golden_suite(opts.samples));
  return report;
}

std::string format(const SelftestReport& report) {
  std::string out;
  char buf[256];
  for (const auto& suite : report.suites) {
    for (const auto& p : suite.properties) {
      const char* verdict = p.skipped() ? "SKIP" : (p.passed() ? "PASS" : "FAIL");
      std::snprintf(buf, sizeof buf, "%-4s %-10s %-36s samples=%zu failures=%zu worst=%.3e\n", verdict,
                    suite.name.c_str(), p.name.c_str(), p.samples, p.failures, p.worst);
      out += buf;
    }
  }
  switch (report.status()) {
    case SelftestStatus::Passed:
      out += "selftest: all suites passed\n";
      break;
    case SelftestStatus::Failed:
      out += "selftest: FAILED\n";
      break;
    case SelftestStatus::Skipped:
      out += "selftest: all suites skipped (no samples)\n";
      break;
  }
  return out;
}

}  // namespace metaprox::harness
