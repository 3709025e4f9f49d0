#pragma once

// Elementary quantitative moduli. All arithmetic is exact; nothing in the
// rates namespace touches floating point.

#include "metaprox/rates/counter_function.hpp"
#include "metaprox/rates/moduli.hpp"
#include "metaprox/rates/numbers.hpp"
#include "metaprox/rates/sequences.hpp"

namespace metaprox::rates {

/// omega(b, eps) = eps^2 / (15 b), the quasiness modulus.
Rational omega(const Rational& b, const Rational& eps);

/// xi_b(eps, g) = g^(ceil(b^2/eps^2))(1), the metastability rate of the
/// resolvent curve.
Natural xi(const Rational& b, const Rational& eps, const CounterFunction& g, EvalBudget& budget);

/// psi(eps, g, K, b) = gtilde^(ceil(b/eps))(K) >= K.
Natural psi(const Rational& eps, const CounterFunction& g, const Natural& k, const Rational& b,
            EvalBudget& budget);

/// phi(eps, S, m, b) = m + S(eps/(4b), m) + 1.
Natural phi_lfp(const Rational& eps, const Moduli& moduli, const Natural& m, const Rational& b);

/// Upper end gtilde^(ceil(b/eps))(l) of the window in which a nonincreasing
/// sequence in [0, b] is guaranteed an eps-stable stretch [N, N + g(N)].
Natural qmcp_bound(const Rational& b, const Rational& eps, const CounterFunction& g,
                   const Natural& l, EvalBudget& budget);

/// g^M(n) = max_{i <= n} g(i).
Natural majorant(const CounterFunction& g, const Natural& n, EvalBudget& budget);

/// Everything the Halpern rate depends on besides eps and g.
struct RateParams {
  Natural b = 1;                 // 2 d(x0, p) <= b and 2 d(u, p) <= b
  Rational gamma = 1;            // gamma_n >= gamma
  RationalSequence gamma_upper = RationalSequence::constant(1);  // >= gamma_n
  RationalSequence alpha_lower = RationalSequence::reciprocal(2);  // <= alpha_n
  Moduli moduli = preset_moduli_reciprocal(2);

  /// Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

}  // namespace metaprox::rates
