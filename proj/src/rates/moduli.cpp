#include "metaprox/rates/moduli.hpp"

#include <stdexcept>

#include "metaprox/errors.hpp"

namespace metaprox::rates {

Moduli preset_moduli_reciprocal(unsigned long offset) {
  if (offset < 2) throw std::invalid_argument("reciprocal moduli need offset >= 2 so that alpha_n <= 1");
  const Natural o(offset);
  Moduli m;
  m.zeta = [o](const Rational& beta) {
    if (beta <= 0) throw std::invalid_argument("zeta needs beta > 0");
    return max(Natural(ceil(Rational(1) / beta) - o), Natural(0));
  };
  m.S = [o](const Rational& eps, const Natural& start) {
    if (eps <= 0) throw std::invalid_argument("S needs eps > 0");
    return max(start, Natural(ceil(Rational(start + o - 1) / eps) - o));
  };
  m.zeta_nonincreasing = true;
  m.description = "reciprocal:" + std::to_string(offset);
  return m;
}

Moduli tikhonov_moduli(const Moduli& r) {
  Moduli m = r;
  m.S = [s = r.S](const Rational& eps, const Natural& start) { return s(eps, start + 1); };
  m.description = "tikhonov(" + r.description + ")";
  return m;
}

Moduli parse_moduli(const std::string& spec) {
  const std::string prefix = "reciprocal:";
  if (spec.rfind(prefix, 0) != 0) throw ConfigError("moduli spec must be reciprocal:K");
  const Natural offset = parse_natural(spec.substr(prefix.size()));
  if (offset < 2 || !offset.fits_ulong_p()) throw ConfigError("reciprocal moduli need offset >= 2");
  return preset_moduli_reciprocal(offset.get_ui());
}

}  // namespace metaprox::rates
