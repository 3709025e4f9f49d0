#pragma once

// Empirical metastability search and its comparison with the computed rate.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metaprox/harness/config.hpp"
#include "metaprox/rates/phi.hpp"

namespace metaprox::harness {

struct MetastabilityQuery {
  rates::Rational eps = 1;
  rates::CounterFunction g = rates::CounterFunction::constant(0);
  std::size_t budget = 1000;  // largest N tried
};

enum class SearchStatus { Found, NotFound, WindowExceeds };

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::size_t N = 0;           // least qualifying N when Found
  std::size_t tried = 0;       // candidates examined
  std::size_t window_end = 0;  // N + g(N) of the candidate that overran, for WindowExceeds
};

/// Least N <= budget such that d(x_i, x_j) <= eps for all i, j in
/// [N, N + g(N)]. A candidate whose window runs past the last point stops the
/// search with WindowExceeds.
SearchResult find_metastable_N(const std::vector<Point>& points, const MetastabilityQuery& q);

const char* to_string(SearchStatus s);

enum class Verdict { Holds, Violated, Undetermined, BudgetExceeded };
const char* to_string(Verdict v);

struct VerifyReport {
  Point fixed_point;
  double two_d_start = 0.0;   // 2 d(x0, p)
  double two_d_anchor = 0.0;  // 2 d(u, p)
  double fixed_defect = 0.0;  // d(p, T p) at the first step size
  bool tikhonov = false;
  SearchResult empirical;
  rates::PhiResult rate;
  Verdict verdict = Verdict::Undetermined;
  std::vector<std::string> notes;
};

/// Checks the hypotheses of the rate bound against the configuration
/// (throwing ConfigError when one fails), searches the trajectory for the
/// least metastable N and compares it with Phi (Theta for Tikhonov runs).
VerifyReport verify_bound(const ExperimentConfig& cfg, const ParamsFile& params,
                          const MetastabilityQuery& q,
                          std::uint64_t rate_budget = rates::EvalBudget::kDefaultLimit);

}  // namespace metaprox::harness
