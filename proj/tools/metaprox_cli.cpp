// metaprox: run proximal point experiments, evaluate rates of metastability,
// compare the two, and run the built-in property suites.
//
// Exit codes: 0 success, 1 usage/config error, 2 solver failure or violated
// bound, 3 selftest failure, 4 evaluation budget exceeded, 5 selftest skipped.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "metaprox/errors.hpp"
#include "metaprox/harness/atomic_file.hpp"
#include "metaprox/harness/config.hpp"
#include "metaprox/harness/csv.hpp"
#include "metaprox/harness/experiment.hpp"
#include "metaprox/harness/metastability.hpp"
#include "metaprox/harness/selftest.hpp"
#include "metaprox/harness/svg.hpp"
#include "metaprox/rates/phi.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace metaprox;

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kSolver = 2,
  kSelftest = 3,
  kBudget = 4,
  kSkipped = 5,
};

template <class K, class V>
json table(const std::map<K, V>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[rates::to_string(k)] = rates::to_string(v);
  return out;
}

json opt(const std::optional<rates::Natural>& v) {
  return v ? json(rates::to_string(*v)) : json(nullptr);
}

json trace_json(const rates::PhiResult& r) {
  const auto& t = r.trace;
  json j;
  j["value"] = opt(r.value);
  j["eps"] = rates::to_string(t.eps);
  j["C"] = rates::to_string(t.C);
  j["eps_hat"] = rates::to_string(t.eps_hat);
  j["c"] = opt(t.c);
  j["xi_iterations"] = opt(t.xi_count);
  j["k_star"] = opt(t.k_star);
  j["theta_star"] = opt(t.theta_star);
  j["K_star"] = opt(t.K_star);
  j["phi"] = opt(t.phi);
  j["eta"] = table(t.eta);
  j["M1"] = table(t.M1);
  j["n"] = table(t.n);
  j["g_hat"] = table(t.g_hat);
  j["theta"] = table(t.theta);
  j["K"] = table(t.K);
  j["K_hat"] = table(t.K_hat);
  j["M2"] = table(t.M2);
  j["f"] = table(t.f);
  j["evaluations"] = t.evaluations;
  j["budget"] = t.budget;
  j["stage"] = t.stage;
  j["failure"] = t.failure ? json(*t.failure) : json(nullptr);
  return j;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    harness::write_file_atomic(out, text);
  }
}

int cmd_simulate(const std::string& config, const std::string& out, const std::string& plot) {
  const auto cfg = harness::load_config(config);
  const auto result = harness::run_experiment(cfg);
  emit(out, harness::emit_csv(result.rows, result.dim));
  if (!plot.empty()) {
    harness::write_file_atomic(plot, harness::render_svg(result.trajectory.points, cfg.anchor, result.limit,
                                                         cfg.target));
  }
  return kOk;
}

int cmd_rates(const std::string& config, const std::string& eps, const std::string& g,
              std::uint64_t budget, bool tikhonov, const std::string& out) {
  const auto params = config.empty() ? harness::ParamsFile{} : harness::load_params(config);
  const auto e = rates::parse_rational(eps);
  if (e <= 0) throw ConfigError("--eps must be positive");
  const auto counter = rates::CounterFunction::parse(g);
  const auto result = tikhonov ? rates::theta_tikhonov(params.params, e, counter, budget)
                               : rates::phi_main(params.params, e, counter, budget);
  json j;
  j["rate"] = tikhonov ? "Theta" : "Phi";
  j["g"] = counter.spec();
  j["trace"] = trace_json(result);
  emit(out, j.dump(2) + "\n");
  if (!result.value) {
    std::cerr << "metaprox: " << *result.trace.failure << "\n";
    return kBudget;
  }
  return kOk;
}

int cmd_verify(const std::string& config, const std::string& params_path, const std::string& eps,
               const std::string& g, std::uint64_t budget, std::size_t search) {
  const auto cfg = harness::load_config(config);
  const auto params = harness::load_params(params_path);
  harness::MetastabilityQuery q;
  q.eps = rates::parse_rational(eps);
  if (q.eps <= 0) throw ConfigError("--eps must be positive");
  q.g = rates::CounterFunction::parse(g);
  q.budget = search;
  const auto report = harness::verify_bound(cfg, params, q, budget);

  json j;
  j["fixed_point"] = geometry::to_string(report.fixed_point);
  j["two_d_start"] = report.two_d_start;
  j["two_d_anchor"] = report.two_d_anchor;
  j["rate"] = report.tikhonov ? "Theta" : "Phi";
  j["empirical"] = {{"status", harness::to_string(report.empirical.status)},
                    {"N", report.empirical.status == harness::SearchStatus::NotFound
                              ? json(nullptr)
                              : json(report.empirical.N)},
                    {"tried", report.empirical.tried}};
  j["bound"] = opt(report.rate.value);
  j["bound_failure"] = report.rate.trace.failure ? json(*report.rate.trace.failure) : json(nullptr);
  j["verdict"] = harness::to_string(report.verdict);
  j["notes"] = report.notes;
  std::cout << j.dump(2) << "\n";

  switch (report.verdict) {
    case harness::Verdict::Holds:
      return kOk;
    case harness::Verdict::BudgetExceeded:
      return kBudget;
    case harness::Verdict::Violated:
      return kSolver;
    case harness::Verdict::Undetermined:
      return kUsage;
  }
  return kUsage;
}

int cmd_selftest(std::size_t samples, std::uint64_t seed, bool inject_fault) {
  harness::SelftestOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  opts.inject_fault = inject_fault;
  const auto report = harness::run_selftest(opts);
  std::cout << harness::format(report);
  switch (report.status()) {
    case harness::SelftestStatus::Passed:
      return kOk;
    case harness::SelftestStatus::Failed:
      return kSelftest;
    case harness::SelftestStatus::Skipped:
      return kSkipped;
  }
  return kSelftest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proximal point iterations in CAT(0) models and their rates of metastability"};
  app.require_subcommand(1);

  std::string config, out, plot, params, eps, g = "const:0";
  std::uint64_t budget = rates::EvalBudget::kDefaultLimit;
  std::size_t search = 1000, samples = 10'000;
  std::uint64_t seed = 0x5eed;
  bool tikhonov = false, inject = false;

  auto* simulate = app.add_subcommand("simulate", "Run an experiment and write its CSV table");
  simulate->add_option("--config", config, "Experiment config file")->required();
  simulate->add_option("--out", out, "Output CSV path ('-' for stdout)");
  simulate->add_option("--plot", plot, "Also write an SVG plot of the iterates");

  auto* rates_cmd = app.add_subcommand("rates", "Evaluate Phi (or Theta) exactly and print its trace");
  rates_cmd->add_option("--config", config, "Rate parameter file (defaults: b=1, gamma=1, ...)");
  rates_cmd->add_option("--eps", eps, "Precision, e.g. 2, 1/3 or 0.5")->required();
  rates_cmd->add_option("--g", g, "Counter function: const:C, affine:A,C or table:v0,..;tail=SPEC");
  rates_cmd->add_option("--budget", budget, "Evaluation budget");
  rates_cmd->add_flag("--tikhonov", tikhonov, "Evaluate the Tikhonov rate Theta");
  rates_cmd->add_option("--out", out, "Write the JSON trace here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Compare the empirical metastable N with the bound");
  verify->add_option("--config", config, "Experiment config file")->required();
  verify->add_option("--params", params, "Rate parameter file")->required();
  verify->add_option("--eps", eps, "Precision")->required();
  verify->add_option("--g", g, "Counter function");
  verify->add_option("--budget", budget, "Evaluation budget for the bound");
  verify->add_option("--search", search, "Largest N tried by the empirical search");

  auto* selftest = app.add_subcommand("selftest", "Run the property suites");
  selftest->add_option("--samples", samples, "Samples per property");
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_flag("--inject-fault", inject, "Perturb the half-plane distance (mutation check)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*simulate) return cmd_simulate(config, out, plot);
    if (*rates_cmd) return cmd_rates(config, eps, g, budget, tikhonov, out);
    if (*verify) return cmd_verify(config, params, eps, g, budget, search);
    if (*selftest) return cmd_selftest(samples, seed, inject);
  } catch (const BudgetExceeded& e) {
    std::cerr << "metaprox: " << e.what() << "\n";
    return kBudget;
  } catch (const SolverError& e) {
    std::cerr << "metaprox: solver failure: " << e.what() << "\n";
    return kSolver;
  } catch (const ConfigError& e) {
    std::cerr << "metaprox: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "metaprox: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "metaprox: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
