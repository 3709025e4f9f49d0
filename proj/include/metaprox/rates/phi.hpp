#pragma once

// Exact evaluation of the rate of metastability Phi for the Halpern-type
// proximal point algorithm, and the derived rate Theta for the
// Tikhonov-type iteration.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "metaprox/rates/rates.hpp"

namespace metaprox::rates {

/// Every intermediate quantity of a Phi evaluation, keyed by the index it
/// was requested at. Only indices the evaluation actually needed appear.
struct PhiTrace {
  Rational eps;
  Rational C;         // 2 + gamma_upper_0 / gamma
  Rational eps_hat;   // eps^2 / (128 b)
  std::optional<Natural> c;           // ceil(64 b^2 / eps^2)
  std::optional<Natural> xi_count;    // ceil(b^2 / eps_hat^2)
  std::optional<Natural> k_star;      // xi_b(eps_hat, f_c) + c
  std::optional<Natural> theta_star;  // theta*(k*)
  std::optional<Natural> K_star;      // theta*(k*) + ghat^M(theta*(k*)) + 2
  std::optional<Natural> phi;         // K* + S(eps^2/16b^2, K*) + 1

  std::map<Natural, Rational> eta;
  std::map<Natural, Rational> M1;
  std::map<Natural, Natural> n;
  std::map<Natural, Natural> g_hat;
  std::map<Natural, Natural> theta;  // theta(l, n_l)
  std::map<Natural, Natural> K;
  std::map<Natural, Natural> K_hat;
  std::map<Natural, Rational> M2;
  std::map<Natural, Natural> f;

  std::uint64_t evaluations = 0;
  std::uint64_t budget = 0;
  std::string stage;                   // last stage entered
  std::optional<std::string> failure;  // set when the budget ran out
};

struct PhiResult {
  std::optional<Natural> value;
  PhiTrace trace;

  bool ok() const { return value.has_value(); }
};

/// Memoizing evaluator for one instance (params, eps, g). Each quantity is
/// exposed so intermediate values can be audited individually. Not thread
/// safe; separate instances are independent.
class PhiEvaluator {
 public:
  PhiEvaluator(RateParams params, Rational eps, CounterFunction g,
               std::uint64_t budget = EvalBudget::kDefaultLimit);

  PhiEvaluator(const PhiEvaluator&) = delete;
  PhiEvaluator& operator=(const PhiEvaluator&) = delete;

  const Rational& C() const { return trace_.C; }
  const Rational& eps_hat() const { return trace_.eps_hat; }
  Natural c() const;

  /// eps^2 / (192 b l); only defined for l >= 1.
  Rational eta(const Natural& l);
  Rational M1(const Natural& l);
  /// max { zeta(M1(i)/b) | 1 <= i <= l }
  Natural n(const Natural& l);
  /// S(eps^2 / 16b^2, m)
  Natural S16(const Natural& m);
  Natural g_hat(const Natural& l);
  Natural g_prime(const Natural& l);
  Natural theta(const Natural& l, const Natural& i);
  Natural theta_star(const Natural& l);
  Natural K(const Natural& l);
  Natural K_hat(const Natural& l);
  Rational gamma_upper_max(const Natural& l);
  Natural rho_tilde(const Rational& beta, const Natural& l);
  Rational M2(const Natural& l);
  Natural f(const Natural& l);

  Natural k_star();
  Natural K_star();
  Natural phi();

  const PhiTrace& trace() const { return trace_; }
  PhiTrace& trace() { return trace_; }
  const EvalBudget& budget() const { return budget_; }

 private:
  Rational half_omega_eta(const Natural& l);

  RateParams params_;
  Rational b_;
  Rational eps_;
  Rational eps16_;  // eps^2 / (16 b^2)
  CounterFunction g_;
  EvalBudget budget_;
  PhiTrace trace_;

  std::map<Natural, Natural> s16_;
  std::map<std::pair<Natural, Natural>, Natural> theta_any_;
};

/// Phi_{b,gamma,(gamma~),(alpha~),zeta,S}(eps, g). A budget overrun is
/// reported through the result (value empty, trace.failure set) together
/// with the partial trace; invalid parameters throw std::invalid_argument.
PhiResult phi_main(const RateParams& params, const Rational& eps, const CounterFunction& g,
                   std::uint64_t budget = EvalBudget::kDefaultLimit);

/// Parameters fed to Phi by the Tikhonov rate: the weight minorant shifted by
/// one index and S_R(eps, m) = R(eps, m + 1). params.alpha_lower holds the
/// minorant of (beta_n) and params.moduli.S holds R.
RateParams tikhonov_params(const RateParams& params);

/// h_g(n) = g(n + 1)
CounterFunction tikhonov_counter(const CounterFunction& g);

/// Theta(eps, g) = Phi_{shifted}(eps/2, h_g) + 1.
PhiResult theta_tikhonov(const RateParams& params, const Rational& eps, const CounterFunction& g,
                         std::uint64_t budget = EvalBudget::kDefaultLimit);

}  // namespace metaprox::rates
