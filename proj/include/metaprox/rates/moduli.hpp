#pragma once

#include <functional>
#include <string>

#include "metaprox/rates/numbers.hpp"

namespace metaprox::rates {

/// Quantitative witnesses for a weight sequence (alpha_n):
///   zeta(beta):  for all m >= zeta(beta), alpha_m <= beta
///   S(eps, m):   prod_{k=m}^{S(eps,m)} (1 - alpha_k) <= eps, nondecreasing in m
/// For the Tikhonov iteration the same shape is used for (beta_n) and the
/// product modulus is called R.
struct Moduli {
  std::function<Natural(const Rational&)> zeta;
  std::function<Natural(const Rational&, const Natural&)> S;
  /// zeta is nonincreasing in beta. Lets the Phi evaluator replace the
  /// running maximum defining n_l by a single evaluation.
  bool zeta_nonincreasing = false;
  std::string description;
};

/// Moduli for alpha_n = 1/(n + offset), offset >= 2:
///   zeta(beta) = max(ceil(1/beta) - offset, 0)
///   S(eps, m)  = max(m, ceil((m + offset - 1)/eps) - offset)
/// The product telescopes to (m + offset - 1)/(N + offset).
Moduli preset_moduli_reciprocal(unsigned long offset);

/// S_R(eps, m) := R(eps, m + 1); zeta is kept.
Moduli tikhonov_moduli(const Moduli& r);

/// Parses "reciprocal:K". Throws ConfigError.
Moduli parse_moduli(const std::string& spec);

}  // namespace metaprox::rates
