#include "metaprox/harness/experiment.hpp"

namespace metaprox::harness {

std::vector<double> coordinates(const Point& p) {
  if (geometry::is_half_plane(p)) {
    const auto& h = geometry::as_half_plane(p);
    return {h.x, h.y};
  }
  return geometry::as_euclidean(p).coords;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  ExperimentResult out;
  out.dim = cfg.model == ModelKind::HalfPlane ? 2 : cfg.dim;
  out.limit = derived_limit(cfg);
  const auto it_cfg = cfg.iteration_config();
  out.trajectory = iterations::run(it_cfg);
  iterations::attach_diagnostics(out.trajectory, it_cfg, out.limit);
  const auto& pts = out.trajectory.points;
  for (std::size_t n = 1; n < pts.size(); ++n) {
    out.rows.push_back(Row{n, coordinates(pts[n]), *out.trajectory.diagnostics[n].to_limit});
  }
  return out;
}

}  // namespace metaprox::harness
