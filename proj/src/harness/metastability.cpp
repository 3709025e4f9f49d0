#include "metaprox/harness/metastability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "metaprox/errors.hpp"

namespace metaprox::harness {
namespace {

bool window_stable(const std::vector<Point>& pts, std::size_t lo, std::size_t hi, double eps) {
  for (std::size_t i = lo; i <= hi; ++i) {
    for (std::size_t j = i + 1; j <= hi; ++j) {
      if (geometry::distance(pts[i], pts[j]) > eps) return false;
    }
  }
  return true;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

}  // namespace

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::NotFound:
      return "not-found";
    case SearchStatus::WindowExceeds:
      return "window-exceeds-trajectory";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Violated:
      return "violated";
    case Verdict::Undetermined:
      return "undetermined";
    case Verdict::BudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

SearchResult find_metastable_N(const std::vector<Point>& points, const MetastabilityQuery& q) {
  if (q.eps <= 0) throw std::invalid_argument("eps must be positive");
  const double eps = q.eps.get_d();
  SearchResult result;
  for (std::size_t n = 0; n <= q.budget; ++n) {
    const rates::Natural width = q.g(rates::Natural(static_cast<unsigned long>(n)));
    const rates::Natural end = width + static_cast<unsigned long>(n);
    if (points.empty() || end >= static_cast<unsigned long>(points.size())) {
      result.status = SearchStatus::WindowExceeds;
      result.N = n;
      result.window_end = end.fits_ulong_p() ? end.get_ui() : SIZE_MAX;
      return result;
    }
    ++result.tried;
    if (window_stable(points, n, end.get_ui(), eps)) {
      result.status = SearchStatus::Found;
      result.N = n;
      return result;
    }
  }
  result.status = SearchStatus::NotFound;
  return result;
}

VerifyReport verify_bound(const ExperimentConfig& cfg, const ParamsFile& params,
                          const MetastabilityQuery& q, std::uint64_t rate_budget) {
  VerifyReport report;
  const auto& rp = params.params;
  rp.validate();
  report.tikhonov = cfg.variant == iterations::Variant::Tikhonov;
  report.fixed_point = params.fixed_point ? *params.fixed_point : derived_limit(cfg);
  const Point& p = report.fixed_point;
  try {
    geometry::require_same_model(p, cfg.start);
  } catch (const ModelMismatch&) {
    throw ConfigError("fixed point is not a point of the configured model");
  }

  const double b = rp.b.get_d();
  report.two_d_start = 2.0 * geometry::distance(cfg.start, p);
  report.two_d_anchor = 2.0 * geometry::distance(cfg.anchor, p);
  if (report.two_d_start > b) {
    throw ConfigError("b = " + rates::to_string(rp.b) + " violates 2 d(x0, p) <= b (2 d(x0, p) = " +
                      fmt(report.two_d_start) + ")");
  }
  if (report.two_d_anchor > b) {
    throw ConfigError("b = " + rates::to_string(rp.b) + " violates 2 d(u, p) <= b (2 d(u, p) = " +
                      fmt(report.two_d_anchor) + ")");
  }

  const auto family = cfg.make_family();
  const auto steps = cfg.steps();
  const auto weights = cfg.weights();
  report.fixed_defect = geometry::distance(p, family.apply(steps.at(0), p));
  if (report.fixed_defect > 1e-9) {
    throw ConfigError("p is not a common fixed point: d(p, T p) = " + fmt(report.fixed_defect));
  }

  const double gamma = rp.gamma.get_d();
  if (gamma > steps.lower() * (1.0 + 1e-12)) {
    throw ConfigError("gamma = " + rates::to_string(rp.gamma) + " exceeds the smallest step size");
  }
  const std::size_t horizon = std::max<std::size_t>(cfg.num_steps, 1);
  for (std::size_t n = 0; n < horizon; ++n) {
    const rates::Natural idx(static_cast<unsigned long>(n));
    if (rp.gamma_upper.at(idx).get_d() < steps.at(n) * (1.0 - 1e-12)) {
      throw ConfigError("gamma_upper is below gamma_" + std::to_string(n));
    }
    if (rp.alpha_lower.at(idx).get_d() > weights.at(n) * (1.0 + 1e-12)) {
      throw ConfigError("alpha_lower exceeds the weight at n = " + std::to_string(n));
    }
  }
  if (cfg.weights_reciprocal) {
    const std::string expected = "reciprocal:" + std::to_string(cfg.weights_offset);
    if (rp.moduli.description != expected) {
      throw ConfigError("moduli '" + rp.moduli.description + "' do not match weights " + expected);
    }
  } else {
    report.notes.push_back("moduli were not checked against an explicit weight list");
  }
  report.notes.push_back("hypotheses checked on the first " + std::to_string(horizon) + " indices");

  report.rate = report.tikhonov ? rates::theta_tikhonov(rp, q.eps, q.g, rate_budget)
                                : rates::phi_main(rp, q.eps, q.g, rate_budget);

  const auto traj = iterations::run(cfg.iteration_config());
  report.empirical = find_metastable_N(traj.points, q);

  if (!report.rate.value) {
    report.verdict = Verdict::BudgetExceeded;
    return report;
  }
  const rates::Natural& bound = *report.rate.value;
  const rates::Natural budget(static_cast<unsigned long>(q.budget));
  switch (report.empirical.status) {
    case SearchStatus::Found:
      report.verdict = rates::Natural(static_cast<unsigned long>(report.empirical.N)) <= bound
                           ? Verdict::Holds
                           : Verdict::Violated;
      break;
    case SearchStatus::NotFound:
      // Every N up to the budget failed; that contradicts the bound if it is covered.
      report.verdict = bound <= budget ? Verdict::Violated : Verdict::Undetermined;
      break;
    case SearchStatus::WindowExceeds:
      report.verdict = rates::Natural(static_cast<unsigned long>(report.empirical.N)) > bound
                           ? Verdict::Violated
                           : Verdict::Undetermined;
      if (report.verdict == Verdict::Undetermined) {
        report.notes.push_back("trajectory too short; increase num_steps");
      }
      break;
  }
  return report;
}

}  // namespace metaprox::harness
