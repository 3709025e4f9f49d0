#include "reference_phi.hpp"

#include <functional>

#include "metaprox/errors.hpp"

namespace metaprox::testing {
namespace {

using Seq = std::function<Rational(const Natural&)>;
using Fn = std::function<Natural(const Natural&)>;

struct Inputs {
  Rational b;
  Rational gamma;
  Seq gamma_upper;
  Seq alpha_lower;
  std::function<Natural(const Rational&)> zeta;
  std::function<Natural(const Rational&, const Natural&)> S;
  Fn g;
  Rational eps;
};

Natural ceil_q(const Rational& q) {
  Natural out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational min_q(const Rational& a, const Rational& b) { return b < a ? b : a; }
Natural max_n(const Natural& a, const Natural& b) { return a < b ? b : a; }

class Reference {
 public:
  Reference(Inputs in, std::uint64_t budget) : in_(std::move(in)), budget_(budget) {}

  ReferencePhi run() {
    ReferencePhi out;
    const Rational& b = in_.b;
    const Rational& eps = in_.eps;
    out.C = 2 + in_.gamma_upper(0) / in_.gamma;
    out.eps_hat = eps * eps / (128 * b);
    out.c = ceil_q(Rational(64 * b * b / (eps * eps)));
    C_ = out.C;
    try {
      const Natural xi_count = ceil_q(Rational(b * b / (out.eps_hat * out.eps_hat)));
      Natural x = 1;
      for (Natural k = 0; k < xi_count; ++k) {
        tick();
        x = f(x + out.c);
      }
      out.k_star = x + out.c;
      Natural ts = 0;
      for (Natural j = 1; j <= *out.k_star; ++j) {
        tick();
        ts = max_n(ts, theta(j, n(j)));
      }
      out.theta_star = ts;
      out.K_star = ts + g_hat_M(ts) + 2;
      out.phi = *out.K_star + S16(*out.K_star) + 1;
    } catch (const BudgetExceeded& e) {
      out.failure = e.what();
    }
    out.steps = steps_;
    return out;
  }

 private:
  void tick() {
    if (++steps_ > budget_) throw BudgetExceeded("reference budget exhausted");
  }

  static void guard(const Natural& v) {
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 4096) throw BudgetExceeded("reference value too large");
  }

  Rational omega(const Rational& e) const { return e * e / (15 * in_.b); }

  Rational eta(const Natural& l) const { return in_.eps * in_.eps / (192 * in_.b * l); }

  Rational M1(const Natural& l) const {
    const Rational eh = in_.eps * in_.eps / (128 * in_.b);
    return min_q(min_q(Rational(omega(Rational(eta(l) / C_)) / 2), omega(eh)), eh);
  }

  Natural n(const Natural& l) {
    Natural best = 0;
    for (Natural i = 1; i <= l; ++i) {
      tick();
      best = max_n(best, in_.zeta(Rational(M1(i) / in_.b)));
    }
    return best;
  }

  Natural S16(const Natural& m) {
    tick();
    return in_.S(Rational(in_.eps * in_.eps / (16 * in_.b * in_.b)), m);
  }

  Natural g_M(const Natural& m) {
    Natural best = 0;
    for (Natural i = 0; i <= m; ++i) {
      tick();
      best = max_n(best, in_.g(i));
    }
    return best;
  }

  Natural g_hat(const Natural& l) {
    const Natural s = S16(l);
    return g_M(l + s + 1) + s;
  }

  Natural g_hat_M(const Natural& m) {
    Natural best = 0;
    for (Natural i = 0; i <= m; ++i) {
      tick();
      best = max_n(best, g_hat(i));
    }
    return best;
  }

  Natural theta(const Natural& l, const Natural& i) {
    const Rational e = omega(Rational(eta(l) / C_)) / 2;
    const Natural rounds = ceil_q(Rational(in_.b / e));
    Natural x = i;
    for (Natural r = 0; r < rounds; ++r) {
      tick();
      x = x + g_hat(x) + 2;
      guard(x);
    }
    return x;
  }

  Natural K(const Natural& l) {
    const Natural t = theta(l, n(l));
    return t + g_hat_M(t) + 2;
  }

  Natural K_hat(const Natural& l) {
    const Natural k = K(l);
    const Natural s = S16(k);
    return k + s + 1 + g_M(k + s + 1);
  }

  Natural rho(const Rational& beta, const Natural& l) {
    Rational top = in_.gamma_upper(0);
    for (Natural j = 1; j <= l; ++j) {
      tick();
      if (in_.gamma_upper(j) > top) top = in_.gamma_upper(j);
    }
    return ceil_q(Rational((2 + top / in_.gamma) * in_.b / beta));
  }

  Rational M2(const Natural& l) {
    const Rational& eps = in_.eps;
    const Rational& b = in_.b;
    const Natural k = K(l);
    Rational alpha_min = in_.alpha_lower(0);
    for (Natural j = 1; j <= k; ++j) {
      tick();
      alpha_min = min_q(alpha_min, in_.alpha_lower(j));
    }
    Rational m = eps / 2;
    m = min_q(m, Rational(eps * eps / (16 * b * (K_hat(l) + 1))));
    m = min_q(m, omega(Rational(eps * eps / (128 * b))));
    m = min_q(m, omega(Rational(eta(l) / C_)));
    m = min_q(m, Rational(eps * eps / (16 * b) * alpha_min));
    return m;
  }

  Natural f(const Natural& l) {
    const Natural v = max_n(rho(M2(l), K_hat(l)), l);
    guard(v);
    return v;
  }

  Inputs in_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  Rational C_;
};

Inputs inputs_from(const rates::RateParams& params, const Rational& eps,
                   const rates::CounterFunction& g) {
  Inputs in;
  in.b = params.b;
  in.gamma = params.gamma;
  in.gamma_upper = [s = params.gamma_upper](const Natural& j) { return s.at(j); };
  in.alpha_lower = [s = params.alpha_lower](const Natural& j) { return s.at(j); };
  in.zeta = params.moduli.zeta;
  in.S = params.moduli.S;
  in.g = [g](const Natural& n) { return g(n); };
  in.eps = eps;
  return in;
}

}  // namespace

ReferencePhi reference_phi(const rates::RateParams& params, const Rational& eps,
                           const rates::CounterFunction& g, std::uint64_t budget) {
  return Reference(inputs_from(params, eps, g), budget).run();
}

ReferencePhi reference_theta(const rates::RateParams& params, const Rational& eps,
                             const rates::CounterFunction& g, std::uint64_t budget) {
  Inputs in = inputs_from(params, Rational(eps / 2), g);
  in.alpha_lower = [s = params.alpha_lower](const Natural& j) { return s.at(j + 1); };
  in.S = [R = params.moduli.S](const Rational& e, const Natural& m) { return R(e, m + 1); };
  in.g = [g](const Natural& n) { return g(n + 1); };
  ReferencePhi out = Reference(std::move(in), budget).run();
  if (out.phi) out.phi = *out.phi + 1;
  return out;
}

}  // namespace metaprox::testing
