#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "metaprox/geometry.hpp"
#include "metaprox/harness/config.hpp"
#include "metaprox/harness/csv.hpp"
#include "metaprox/harness/experiment.hpp"
#include "metaprox/harness/metastability.hpp"
#include "metaprox/harness/selftest.hpp"
#include "metaprox/rates/phi.hpp"

namespace py = pybind11;
using namespace metaprox;

namespace {

using XY = std::tuple<double, double>;

geometry::Point hp(const XY& p) { return geometry::half_plane(std::get<0>(p), std::get<1>(p)); }

XY xy(const geometry::Point& p) {
  const auto& h = geometry::as_half_plane(p);
  return {h.x, h.y};
}

geometry::Geodesic target(const std::string& kind, double a, double r) {
  if (kind == "ray") return geometry::vertical_ray(a);
  if (kind == "semicircle") return geometry::semicircle(a, r);
  throw py::value_error("target must be 'ray' or 'semicircle'");
}

py::dict trace_dict(const rates::PhiResult& r) {
  auto opt = [](const std::optional<rates::Natural>& v) -> py::object {
    return v ? py::int_(py::str(rates::to_string(*v))) : py::object(py::none());
  };
  py::dict d;
  d["value"] = opt(r.value);
  d["C"] = rates::to_string(r.trace.C);
  d["eps_hat"] = rates::to_string(r.trace.eps_hat);
  d["c"] = opt(r.trace.c);
  d["k_star"] = opt(r.trace.k_star);
  d["theta_star"] = opt(r.trace.theta_star);
  d["K_star"] = opt(r.trace.K_star);
  d["evaluations"] = r.trace.evaluations;
  d["failure"] = r.trace.failure ? py::object(py::str(*r.trace.failure)) : py::object(py::none());
  return d;
}

rates::RateParams params_from(const std::string& text) {
  return text.empty() ? rates::RateParams{} : harness::parse_params(text).params;
}

}  // namespace

PYBIND11_MODULE(_metaprox, m) {
  m.doc() = "Proximal point iterations in the hyperbolic half-plane and exact rates of metastability";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  m.def("distance", [](const XY& p, const XY& q) { return geometry::distance(hp(p), hp(q)); },
        "Hyperbolic distance between two half-plane points (x, y).");
  m.def("combine", [](const XY& p, const XY& q, double t) { return xy(geometry::combine(hp(p), hp(q), t)); },
        "Point at parameter t on the geodesic from p to q.", py::arg("p"), py::arg("q"), py::arg("t"));
  m.def(
      "project",
      [](const XY& p, const std::string& kind, double a, double r) {
        return xy(geometry::project(hp(p), target(kind, a, r)));
      },
      py::arg("p"), py::arg("kind"), py::arg("a"), py::arg("r") = 1.0);

  m.def(
      "simulate",
      [](const std::string& config_text) {
        const auto result = harness::run_experiment(harness::parse_config(config_text));
        std::vector<std::tuple<std::size_t, std::vector<double>, double>> rows;
        for (const auto& row : result.rows) rows.emplace_back(row.step, row.coords, row.dist_to_limit);
        return rows;
      },
      "Runs an experiment config and returns (step, coords, dist_to_limit) rows.");
  m.def(
      "simulate_csv",
      [](const std::string& config_text) {
        const auto result = harness::run_experiment(harness::parse_config(config_text));
        return harness::emit_csv(result.rows, result.dim);
      });

  m.def(
      "phi",
      [](const std::string& eps, const std::string& g, const std::string& params, std::uint64_t budget,
         bool tikhonov) {
        const auto p = params_from(params);
        const auto e = rates::parse_rational(eps);
        const auto counter = rates::CounterFunction::parse(g);
        py::gil_scoped_release release;
        auto r = tikhonov ? rates::theta_tikhonov(p, e, counter, budget) : rates::phi_main(p, e, counter, budget);
        py::gil_scoped_acquire acquire;
        return trace_dict(r);
      },
      py::arg("eps"), py::arg("g") = "const:0", py::arg("params") = "",
      py::arg("budget") = rates::EvalBudget::kDefaultLimit, py::arg("tikhonov") = false,
      "Exact rate of metastability; integers are returned as Python ints.");

  m.def(
      "find_metastable_n",
      [](const std::vector<double>& seq, const std::string& eps, const std::string& g, std::size_t budget) {
        std::vector<geometry::Point> pts;
        for (double v : seq) pts.push_back(geometry::euclidean({v}));
        harness::MetastabilityQuery q;
        q.eps = rates::parse_rational(eps);
        q.g = rates::CounterFunction::parse(g);
        q.budget = budget;
        const auto r = harness::find_metastable_N(pts, q);
        return std::make_tuple(std::string(harness::to_string(r.status)), r.N);
      },
      py::arg("seq"), py::arg("eps"), py::arg("g"), py::arg("budget") = 1000);

  m.def(
      "selftest",
      [](std::size_t samples, std::uint64_t seed, bool inject_fault) {
        harness::SelftestOptions o{samples, seed, inject_fault};
        const auto r = harness::run_selftest(o);
        switch (r.status()) {
          case harness::SelftestStatus::Passed:
            return std::string("passed");
          case harness::SelftestStatus::Failed:
            return std::string("failed");
          case harness::SelftestStatus::Skipped:
            return std::string("skipped");
        }
        return std::string("failed");
      },
      py::arg("samples") = 1000, py::arg("seed") = 0x5eed, py::arg("inject_fault") = false);
}
