#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "metaprox/rates/phi.hpp"

namespace metaprox::testing {

using rates::Natural;
using rates::Rational;

// Straight-line evaluation of Phi: every max and min is an explicit scan,
// nothing is cached, no closed forms beyond the moduli themselves.
struct ReferencePhi {
  Rational C;
  Rational eps_hat;
  Natural c;
  std::optional<Natural> k_star;
  std::optional<Natural> theta_star;
  std::optional<Natural> K_star;
  std::optional<Natural> phi;
  std::uint64_t steps = 0;
  std::optional<std::string> failure;
};

ReferencePhi reference_phi(const rates::RateParams& params, const Rational& eps,
                           const rates::CounterFunction& g, std::uint64_t budget);

// Theta = reference Phi on the shifted parameters at eps/2 and n -> g(n+1), plus 1.
ReferencePhi reference_theta(const rates::RateParams& params, const Rational& eps,
                             const rates::CounterFunction& g, std::uint64_t budget);

}  // namespace metaprox::testing
