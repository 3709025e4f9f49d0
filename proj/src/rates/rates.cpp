#include "metaprox/rates/rates.hpp"

#include <stdexcept>

namespace metaprox::rates {
namespace {

void require_positive(const Rational& q, const char* what) {
  if (q <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

Rational omega(const Rational& b, const Rational& eps) {
  require_positive(b, "b");
  require_positive(eps, "eps");
  return Rational(eps * eps / (15 * b));
}

Natural xi(const Rational& b, const Rational& eps, const CounterFunction& g, EvalBudget& budget) {
  require_positive(b, "b");
  require_positive(eps, "eps");
  return g.iterate(ceil(Rational(b * b / (eps * eps))), 1, budget);
}

Natural psi(const Rational& eps, const CounterFunction& g, const Natural& k, const Rational& b,
            EvalBudget& budget) {
  require_positive(b, "b");
  require_positive(eps, "eps");
  if (k < 0) throw std::invalid_argument("K must be natural");
  return g.tilde().iterate(ceil(Rational(b / eps)), k, budget);
}

Natural phi_lfp(const Rational& eps, const Moduli& moduli, const Natural& m, const Rational& b) {
  require_positive(b, "b");
  require_positive(eps, "eps");
  return m + moduli.S(Rational(eps / (4 * b)), m) + 1;
}

Natural qmcp_bound(const Rational& b, const Rational& eps, const CounterFunction& g,
                   const Natural& l, EvalBudget& budget) {
  return psi(eps, g, l, b, budget);
}

Natural majorant(const CounterFunction& g, const Natural& n, EvalBudget& budget) {
  return g.majorant(n, budget);
}

void RateParams::validate() const {
  if (b < 1) throw std::invalid_argument("b must be a positive integer");
  require_positive(gamma, "gamma");
  if (!gamma_upper.positive()) throw std::invalid_argument("step-size majorant must be positive");
  if (!alpha_lower.within_unit_interval()) {
    throw std::invalid_argument("weight minorant must lie in (0, 1]");
  }
  if (!moduli.zeta || !moduli.S) throw std::invalid_argument("moduli zeta and S are required");
}

}  // namespace metaprox::rates
