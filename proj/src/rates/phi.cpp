#include "metaprox/rates/phi.hpp"

#include <stdexcept>

#include "metaprox/errors.hpp"

namespace metaprox::rates {
namespace {

std::string brief(const Natural& n) {
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (bits <= 64) return n.get_str();
  return "~2^" + std::to_string(bits);
}

template <class Map, class Key, class Fn>
auto memo(Map& table, const Key& key, Fn&& compute) -> typename Map::mapped_type {
  if (auto it = table.find(key); it != table.end()) return it->second;
  auto value = compute();
  table.emplace(key, value);
  return value;
}

}  // namespace

PhiEvaluator::PhiEvaluator(RateParams params, Rational eps, CounterFunction g, std::uint64_t budget)
    : params_(std::move(params)),
      b_(params_.b),
      eps_(std::move(eps)),
      g_(std::move(g)),
      budget_(budget) {
  params_.validate();
  if (eps_ <= 0) throw std::invalid_argument("eps must be positive");
  eps16_ = eps_ * eps_ / (16 * b_ * b_);
  trace_.eps = eps_;
  trace_.budget = budget;
  trace_.C = 2 + params_.gamma_upper.at(0) / params_.gamma;
  trace_.eps_hat = eps_ * eps_ / (128 * b_);
}

Natural PhiEvaluator::c() const { return ceil(Rational(64 * b_ * b_ / (eps_ * eps_))); }

Rational PhiEvaluator::eta(const Natural& l) {
  if (l <= 0) throw std::domain_error("eta_l is only defined for l >= 1");
  return memo(trace_.eta, l, [&] { return Rational(eps_ * eps_ / (192 * b_ * l)); });
}

Rational PhiEvaluator::half_omega_eta(const Natural& l) {
  return Rational(omega(b_, Rational(eta(l) / trace_.C)) / 2);
}

Rational PhiEvaluator::M1(const Natural& l) {
  return memo(trace_.M1, l, [&] {
    return min(min(half_omega_eta(l), omega(b_, trace_.eps_hat)), trace_.eps_hat);
  });
}

Natural PhiEvaluator::n(const Natural& l) {
  return memo(trace_.n, l, [&] {
    auto at = [&](const Natural& i) {
      budget_.charge();
      return params_.moduli.zeta(Rational(M1(i) / b_));
    };
    // M1 is nonincreasing in l, so a nonincreasing zeta makes the running
    // maximum attained at i = l.
    if (params_.moduli.zeta_nonincreasing) return at(l);
    Natural best = 0;
    Natural from = 1;
    if (auto it = trace_.n.lower_bound(l); it != trace_.n.begin()) {
      --it;
      best = it->second;
      from = it->first + 1;
    }
    budget_.require(Natural(l - from + 1));
    for (Natural i = from; i <= l; ++i) best = max(best, at(i));
    return best;
  });
}

Natural PhiEvaluator::S16(const Natural& m) {
  if (auto it = s16_.find(m); it != s16_.end()) return it->second;
  budget_.charge();
  Natural value = params_.moduli.S(eps16_, m);
  auto [pos, inserted] = s16_.emplace(m, value);
  if (pos != s16_.begin() && std::prev(pos)->second > value) {
    throw std::invalid_argument("modulus S is not nondecreasing in its second argument");
  }
  if (std::next(pos) != s16_.end() && std::next(pos)->second < value) {
    throw std::invalid_argument("modulus S is not nondecreasing in its second argument");
  }
  return value;
}

Natural PhiEvaluator::g_hat(const Natural& l) {
  return memo(trace_.g_hat, l, [&] {
    const Natural s = S16(l);
    return Natural(g_.majorant(l + s + 1, budget_) + s);
  });
}

// Inside the iteration for theta the arguments are transient and can grow
// large, so nothing is kept.
Natural PhiEvaluator::g_prime(const Natural& l) {
  budget_.charge();
  const Natural s = params_.moduli.S(eps16_, l);
  return g_.majorant(l + s + 1, budget_) + s + 2;
}

Natural PhiEvaluator::theta(const Natural& l, const Natural& i) {
  const auto key = std::make_pair(l, i);
  if (auto it = theta_any_.find(key); it != theta_any_.end()) return it->second;
  // g' is nondecreasing because S is nondecreasing in m and g^M is.
  const auto g_prime_fn = CounterFunction::composite(
      "g'", [this](const Natural& m) { return g_prime(m); }, true);
  Natural value = psi(half_omega_eta(l), g_prime_fn, i, b_, budget_);
  theta_any_.emplace(key, value);
  return value;
}

Natural PhiEvaluator::theta_star(const Natural& l) {
  auto at = [&](const Natural& j) {
    trace_.stage = "theta(" + brief(j) + ", n_" + brief(j) + ")";
    const Natural value = theta(j, n(j));
    trace_.theta.emplace(j, value);
    return value;
  };
  // With n_j nondecreasing, theta(j, n_j) iterates a nondecreasing inflationary
  // map more often from a larger seed as j grows, so the maximum sits at j = l.
  if (params_.moduli.zeta_nonincreasing) return at(l);
  budget_.require(l);
  Natural best = 0;
  for (Natural j = 1; j <= l; ++j) best = max(best, at(j));
  return best;
}

Natural PhiEvaluator::K(const Natural& l) {
  return memo(trace_.K, l, [&] {
    const Natural t = theta(l, n(l));
    trace_.theta.emplace(l, t);
    // ghat is nondecreasing, so its majorant is ghat itself.
    return Natural(t + g_hat(t) + 2);
  });
}

Natural PhiEvaluator::K_hat(const Natural& l) {
  return memo(trace_.K_hat, l, [&] {
    const Natural k = K(l);
    const Natural s = S16(k);
    return Natural(k + s + 1 + g_.majorant(k + s + 1, budget_));
  });
}

Rational PhiEvaluator::gamma_upper_max(const Natural& l) {
  return params_.gamma_upper.prefix_max(l, budget_);
}

Natural PhiEvaluator::rho_tilde(const Rational& beta, const Natural& l) {
  if (beta <= 0) throw std::invalid_argument("rho~ needs beta > 0");
  return ceil(Rational((2 + gamma_upper_max(l) / params_.gamma) * b_ / beta));
}

Rational PhiEvaluator::M2(const Natural& l) {
  return memo(trace_.M2, l, [&] {
    const Natural k_hat = K_hat(l);
    Rational value = eps_ / 2;
    value = min(value, Rational(eps_ * eps_ / (16 * b_ * (k_hat + 1))));
    value = min(value, omega(b_, trace_.eps_hat));
    value = min(value, omega(b_, Rational(eta(l) / trace_.C)));
    value = min(value, Rational(eps_ * eps_ / (16 * b_) * params_.alpha_lower.prefix_min(K(l), budget_)));
    return value;
  });
}

Natural PhiEvaluator::f(const Natural& l) {
  return memo(trace_.f, l, [&] {
    trace_.stage = "f(" + brief(l) + ")";
    Natural value = max(rho_tilde(M2(l), K_hat(l)), l);
    budget_.check_size(value);
    return value;
  });
}

Natural PhiEvaluator::k_star() {
  if (trace_.k_star) return *trace_.k_star;
  const Natural shift = c();
  trace_.c = shift;
  trace_.xi_count = ceil(Rational(b_ * b_ / (trace_.eps_hat * trace_.eps_hat)));
  const auto f_c = CounterFunction::composite(
      "f_c", [this, shift](const Natural& l) { return f(l + shift); }, false);
  trace_.stage = "xi_b(eps_hat, f_c)";
  trace_.k_star = xi(b_, trace_.eps_hat, f_c, budget_) + shift;
  return *trace_.k_star;
}

Natural PhiEvaluator::K_star() {
  if (trace_.K_star) return *trace_.K_star;
  const Natural k = k_star();
  trace_.stage = "theta*(k*)";
  const Natural t = theta_star(k);
  trace_.theta_star = t;
  trace_.stage = "K*";
  trace_.K_star = t + g_hat(t) + 2;
  return *trace_.K_star;
}

Natural PhiEvaluator::phi() {
  if (trace_.phi) return *trace_.phi;
  const Natural k = K_star();
  trace_.stage = "Phi";
  trace_.phi = k + S16(k) + 1;
  trace_.evaluations = budget_.used();
  return *trace_.phi;
}

PhiResult phi_main(const RateParams& params, const Rational& eps, const CounterFunction& g,
                   std::uint64_t budget) {
  PhiEvaluator evaluator(params, eps, g, budget);
  PhiResult result;
  try {
    result.value = evaluator.phi();
  } catch (const BudgetExceeded& e) {
    evaluator.trace().failure = std::string(e.what()) + " at " + evaluator.trace().stage;
  }
  evaluator.trace().evaluations = evaluator.budget().used();
  result.trace = evaluator.trace();
  return result;
}

RateParams tikhonov_params(const RateParams& params) {
  RateParams shifted = params;
  shifted.alpha_lower = params.alpha_lower.shifted(1);
  shifted.moduli = tikhonov_moduli(params.moduli);
  return shifted;
}

CounterFunction tikhonov_counter(const CounterFunction& g) { return g.shift(1); }

PhiResult theta_tikhonov(const RateParams& params, const Rational& eps, const CounterFunction& g,
                         std::uint64_t budget) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  PhiResult result = phi_main(tikhonov_params(params), Rational(eps / 2), tikhonov_counter(g), budget);
  if (result.value) result.value = *result.value + 1;
  return result;
}

}  // namespace metaprox::rates
