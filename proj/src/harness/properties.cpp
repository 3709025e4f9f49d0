#include "metaprox/harness/properties.hpp"

#include <algorithm>
#include <cmath>

#include "metaprox/iterations.hpp"
#include "metaprox/operators.hpp"
#include "metaprox/rates/phi.hpp"

namespace metaprox::harness {

using geometry::combine;
using geometry::Point;

namespace {

constexpr double kTol = 1e-9;

double sq(double v) { return v * v; }

rates::Rational frac(long p, long q) { return rates::Rational(rates::Rational(p) / q); }

PropertyResult property(std::string name, double tol = kTol) {
  PropertyResult r;
  r.name = std::move(name);
  r.tolerance = tol;
  return r;
}

void absorb(PropertyResult& r, const operators::CheckResult& c) {
  r.samples += c.checked;
  r.worst = std::max(r.worst, c.worst_violation);
  if (!c.holds) ++r.failures;
}

// <xy, uv> through an arbitrary distance function.
double ql(const DistanceFn& d, const Point& x, const Point& y, const Point& u, const Point& v) {
  return 0.5 * (sq(d(x, v)) + sq(d(y, u)) - sq(d(x, u)) - sq(d(y, v)));
}

DistanceFn resolve(const SuiteOptions& opts) {
  if (opts.distance) return opts.distance;
  return [](const Point& p, const Point& q) { return geometry::distance(p, q); };
}

Point rotate90(const Point& p) {
  const auto& c = geometry::as_euclidean(p).coords;
  return geometry::euclidean({-c[1], c[0]});
}

}  // namespace

void PropertyResult::record(double excess) {
  ++samples;
  worst = std::max(worst, std::max(excess, 0.0));
  if (excess > tolerance) ++failures;
}

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed(); });
}

bool SuiteReport::skipped() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.skipped(); });
}

const PropertyResult* SuiteReport::find(const std::string& property) const {
  for (const auto& p : properties) {
    if (p.name == property) return &p;
  }
  return nullptr;
}

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

std::size_t Sampler::index(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Point Sampler::half_plane() { return geometry::half_plane(uniform(-8.0, 8.0), std::exp(uniform(-2.0, 2.0))); }

Point Sampler::euclidean(std::size_t dim, double radius) {
  std::vector<double> c(dim);
  for (auto& v : c) v = uniform(-radius, radius);
  return geometry::euclidean(std::move(c));
}

SuiteReport geometry_suite(const SuiteOptions& opts) {
  const DistanceFn d = resolve(opts);
  Sampler s(opts.seed);
  const std::size_t n = opts.samples;

  auto cat0 = property("cat0_inequality");
  auto law = property("geodesic_law");
  auto busemann = property("busemann_convexity");
  auto expand = property("squared_distance_expansion");
  auto three_point = property("three_point_bound");
  auto ql1 = property("quasi_linearization_i");
  auto ql2 = property("quasi_linearization_ii");
  auto ql3 = property("quasi_linearization_iii");
  auto ql4 = property("quasi_linearization_iv");
  auto cs = property("cauchy_schwarz");
  auto dot = property("euclidean_dot_product", 1e-12);

  for (std::size_t i = 0; i < n; ++i) {
    const Point x = s.half_plane(), y = s.half_plane(), z = s.half_plane(), w = s.half_plane();
    const double t = s.uniform(0.0, 1.0), t2 = s.uniform(0.0, 1.0);
    const Point m = combine(x, y, t);
    const double dxy = d(x, y);

    cat0.record(sq(d(z, m)) - ((1 - t) * sq(d(z, x)) + t * sq(d(z, y)) - t * (1 - t) * sq(dxy)));
    law.record(std::abs(d(m, combine(x, y, t2)) - std::abs(t - t2) * dxy));
    busemann.record(d(m, combine(z, w, t)) - ((1 - t) * d(x, z) + t * d(y, w)));
    expand.record(sq(d(m, z)) - (sq(1 - t) * sq(d(x, z)) + 2 * t * ql(d, y, z, m, z)));

    const double b = std::max(dxy, d(y, z));
    three_point.record(sq(dxy) - (sq(d(y, z)) + 2 * b * d(x, z)));

    ql1.record(std::abs(ql(d, x, y, x, y) - sq(dxy)));
    ql2.record(std::abs(ql(d, x, y, z, w) - ql(d, z, w, x, y)));
    ql3.record(std::abs(ql(d, y, x, z, w) + ql(d, x, y, z, w)));
    const Point v = s.half_plane();
    ql4.record(std::abs(ql(d, x, y, z, w) + ql(d, x, y, w, v) - ql(d, x, y, z, v)));
    cs.record(ql(d, x, y, z, w) - dxy * d(z, w));
  }

  for (std::size_t i = 0; i < n / 10; ++i) {
    const std::size_t dim = s.index(1, 5);
    const Point x = s.euclidean(dim), y = s.euclidean(dim), u = s.euclidean(dim), v = s.euclidean(dim);
    const auto& cx = geometry::as_euclidean(x).coords;
    const auto& cy = geometry::as_euclidean(y).coords;
    const auto& cu = geometry::as_euclidean(u).coords;
    const auto& cv = geometry::as_euclidean(v).coords;
    double inner = 0.0;
    for (std::size_t k = 0; k < dim; ++k) inner += (cx[k] - cy[k]) * (cu[k] - cv[k]);
    dot.record(std::abs(ql(d, x, y, u, v) - inner));
  }

  return {"geometry", {cat0, law, busemann, expand, three_point, ql1, ql2, ql3, ql4, cs, dot}};
}

SuiteReport operator_suite(const SuiteOptions& opts) {
  Sampler s(opts.seed + 1);
  const std::size_t n = opts.samples;
  const auto ray = geometry::vertical_ray(2.0);
  const auto circle = geometry::semicircle(3.0, 2.0);

  auto p2_ray = property("p2_projection_ray");
  auto p2_circle = property("p2_projection_semicircle");
  auto p2_prox = property("p2_prox");
  auto mutual = property("mutual_p2_prox");
  auto displacement = property("displacement_bounds_prox");
  auto joint = property("joint_firm_nonexpansiveness");
  auto nonexp = property("nonexpansive");
  auto rotation = property("rotation_not_p2");
  auto sqne = property("fixed_point_modulus");
  auto quasi = property("quantitative_quasiness");

  const operators::Map proj_ray = [&](const Point& p) { return geometry::project(p, ray); };
  const operators::Map proj_circle = [&](const Point& p) { return geometry::project(p, circle); };

  for (std::size_t i = 0; i < n; ++i) {
    const std::pair<Point, Point> pair[] = {{s.half_plane(), s.half_plane()}};
    absorb(p2_ray, operators::check_P2(proj_ray, pair));
    absorb(p2_circle, operators::check_P2(proj_circle, pair));

    const auto prox = operators::prox_family(s.half_plane());
    absorb(p2_prox, operators::check_P2(prox.at(std::exp(s.uniform(-2.0, 2.0))), pair));
    absorb(mutual, operators::check_mutually_P2(prox.at(1.0), prox.at(2.0), 1.0, 2.0, pair));
  }

  for (std::size_t i = 0; i < n / 10; ++i) {
    const auto prox = operators::prox_family(s.half_plane());
    const Point pts[] = {s.half_plane()};
    absorb(displacement, operators::displacement_bound_check(prox.at(1.0), prox.at(3.0), 1.0, 3.0, pts));

    // Prox and resolvent families, with (1 - alpha) lambda = (1 - beta) mu.
    const auto resolvent = operators::resolvent_family(proj_ray);
    for (const auto* family : {&prox, &resolvent}) {
      const double lambda = std::exp(s.uniform(-1.5, 1.5));
      const double mu = std::exp(s.uniform(-1.5, 1.5));
      const double alpha = s.uniform(std::max(0.0, 1.0 - mu / lambda), 1.0);
      const double beta = std::clamp(1.0 - (1.0 - alpha) * lambda / mu, 0.0, 1.0);
      const Point x = s.half_plane(), y = s.half_plane();
      const Point tx = family->apply(lambda, x), uy = family->apply(mu, y);
      joint.record(geometry::distance(tx, uy) -
                   geometry::distance(combine(x, tx, alpha), combine(y, uy, beta)));
      const double g = std::exp(s.uniform(-2.0, 2.0));
      nonexp.record(geometry::distance(family->apply(g, x), family->apply(g, y)) - geometry::distance(x, y));
    }
    const Point x = s.half_plane(), y = s.half_plane();
    nonexp.record(geometry::distance(proj_circle(x), proj_circle(y)) - geometry::distance(x, y));
  }

  if (n > 0) {
    const std::pair<Point, Point> pair[] = {{geometry::euclidean({1.0, 0.0}), geometry::euclidean({0.0, 0.0})}};
    const auto r = operators::check_P2(rotate90, pair);
    rotation.samples = 1;
    rotation.worst = std::abs(r.worst_violation - 2.0);
    if (r.holds || rotation.worst > 1e-12) rotation.failures = 1;
  }

  // Projection onto the ray x = 2 fixes p = (2, 1); samples within b = 4 of p.
  {
    const Point p = geometry::half_plane(2.0, 1.0);
    std::vector<Point> zs;
    while (zs.size() < n) {
      const Point z = geometry::half_plane(s.uniform(-6.0, 10.0), std::exp(s.uniform(-3.5, 3.5)));
      if (geometry::distance(z, p) <= 4.0) zs.push_back(z);
    }
    if (!zs.empty()) absorb(sqne, operators::sqne_modulus_check(proj_ray, p, 4.0, 0.1, zs));
  }

  // p just off the semicircle; z drawn around the semicircle so that the
  // premises of the implication are met.
  {
    const double b = 8.0, eps = 0.5;
    const double theta0 = 1.1;
    const Point p = geometry::half_plane(3.0 + 2.0001 * std::cos(theta0), 2.0001 * std::sin(theta0));
    std::size_t attempts = 0;
    while (quasi.samples < n && attempts < 50 * n) {
      ++attempts;
      const double phi = s.uniform(0.3, 3.14159265358979 - 0.3);
      const double r = 2.0 * std::exp(s.uniform(-0.01, 0.01));
      const Point z = geometry::half_plane(3.0 + r * std::cos(phi), r * std::sin(phi));
      if (geometry::distance(z, p) > b) continue;
      const auto e = operators::quantitative_quasiness_check(proj_circle, z, p, b, eps);
      if (!e.premises_hold) continue;
      quasi.record(e.holds ? 0.0 : e.conclusion - eps);
    }
    if (quasi.samples < n) quasi.failures += 1;  // could not gather enough premised instances
  }

  return {"operators", {p2_ray, p2_circle, p2_prox, mutual, displacement, joint, nonexp, rotation, sqne, quasi}};
}

SuiteReport iteration_suite(const SuiteOptions& opts) {
  Sampler s(opts.seed + 2);
  const std::size_t runs = opts.samples / 100;
  const std::size_t steps = 40;

  auto bounded = property("bounded_by_anchor_and_start");
  auto residual = property("residual_identity");
  auto consistency = property("tikhonov_halpern_consistency", 1e-12);
  auto curve = property("resolvent_curve_inequality");

  const std::vector<geometry::Geodesic> targets = {geometry::vertical_ray(2.0), geometry::semicircle(3.0, 2.0)};
  for (std::size_t r = 0; r < runs; ++r) {
    const Point u = s.half_plane(), x0 = s.half_plane();
    const bool use_prox = r % 3 == 2;
    const auto& target = targets[r % 2];
    const auto family = use_prox ? operators::prox_family(s.half_plane()) : operators::projection_family(target);
    const Point p = use_prox ? std::get<operators::ProxSquaredDistance>(family.variant()).center
                             : geometry::project(u, target);
    const auto steps_cfg = operators::StepSizes::constant(std::exp(s.uniform(-1.0, 1.0)));
    const auto weights = iterations::WeightScheme::reciprocal(static_cast<unsigned>(s.index(1, 4)));
    iterations::IterationConfig cfg{family, steps_cfg, weights, u, x0, steps, iterations::Variant::Halpern};
    const auto traj = iterations::halpern_run(cfg);

    const double radius = std::max(geometry::distance(u, p), geometry::distance(x0, p));
    for (std::size_t k = 0; k < traj.points.size(); ++k) {
      bounded.record(geometry::distance(traj.points[k], p) - radius);
      if (k + 1 < traj.points.size()) {
        const Point tx = family.apply(steps_cfg.at(k), traj.points[k]);
        residual.record(std::abs(geometry::distance(traj.points[k + 1], tx) -
                                 weights.at(k) * geometry::distance(u, tx)));
      }
    }

    // x_n := combine(u, y_n, 1 - beta_n) is the Halpern run with alpha_n = beta_{n+1}.
    std::vector<double> beta(steps + 2), alpha(steps + 1);
    for (auto& b : beta) b = s.uniform(0.05, 1.0);
    for (std::size_t k = 0; k <= steps; ++k) alpha[k] = beta[k + 1];
    iterations::IterationConfig tik{family, steps_cfg, iterations::WeightScheme::explicit_list(beta), u, x0, steps,
                                    iterations::Variant::Tikhonov};
    const auto ys = iterations::tikhonov_run(tik);
    iterations::IterationConfig hal{family, steps_cfg, iterations::WeightScheme::explicit_list(alpha), u,
                                    combine(u, x0, 1.0 - beta[0]), steps, iterations::Variant::Halpern};
    const auto xs = iterations::halpern_run(hal);
    for (std::size_t k = 0; k <= steps; ++k) {
      consistency.record(geometry::distance(xs.points[k], combine(u, ys.points[k], 1.0 - beta[k])));
    }
  }

  const Point u = geometry::half_plane(1.0, 2.0);
  const auto ray = geometry::vertical_ray(2.0);
  const operators::Map proj = [&](const Point& p) { return geometry::project(p, ray); };
  for (std::size_t i = 0; i < opts.samples / 10; ++i) {
    const auto e = iterations::curve_inequality_check(proj, u, 0.3, s.half_plane());
    curve.record(e.lhs - e.rhs);
  }

  return {"iterations", {bounded, residual, consistency, curve}};
}

SuiteReport rates_suite(const SuiteOptions& opts) {
  using rates::Natural;
  using rates::Rational;
  Sampler s(opts.seed + 3);
  const std::size_t n = std::min<std::size_t>(opts.samples, 100);

  auto product = property("preset_S_product", 1e-12);
  auto zeta = property("preset_zeta", 0.0);
  auto psi_ge = property("psi_at_least_K", 0.0);
  auto tilde_monotone = property("tilde_iterates_nondecreasing", 0.0);
  auto pipeline = property("phi_pipeline_invariants", 0.0);
  auto determinism = property("phi_deterministic", 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    const unsigned long offset = 2 + s.index(0, 3);
    const auto m = rates::preset_moduli_reciprocal(offset);
    const Rational eps = frac(static_cast<long>(s.index(1, 999)), 1000);
    const std::size_t start = s.index(0, 200);
    const Natural stop = m.S(eps, Natural(static_cast<unsigned long>(start)));
    double prod = 1.0;
    for (unsigned long k = start; k <= stop.get_ui(); ++k) prod *= 1.0 - 1.0 / static_cast<double>(k + offset);
    product.record(prod - eps.get_d());

    const Rational beta = frac(1, static_cast<long>(s.index(1, 500)));
    const Natural z = m.zeta(beta);
    // alpha_m = 1/(m + offset) <= beta for m = zeta(beta), and alpha is decreasing.
    zeta.record(Rational(Rational(1) / (z + offset) - beta).get_d() > 0 ? 1.0 : 0.0);

    rates::EvalBudget budget(100'000);
    const auto g = s.index(0, 1) ? rates::CounterFunction::constant(s.index(0, 5))
                                 : rates::CounterFunction::affine(1, s.index(0, 3));
    const Natural k(static_cast<unsigned long>(s.index(0, 50)));
    const Rational e = frac(static_cast<long>(s.index(1, 20)), static_cast<long>(s.index(1, 20)));
    psi_ge.record(rates::psi(e, g, k, Rational(1), budget) >= k ? 0.0 : 1.0);
    const auto tilde = g.tilde();
    Natural prev = 0;
    for (unsigned long j = 1; j <= 10; ++j) {
      const Natural cur = tilde.iterate(j, 0, budget);
      tilde_monotone.record(cur >= prev ? 0.0 : 1.0);
      prev = cur;
    }
  }

  if (n > 0) {
    const rates::RateParams params;
    for (long e : {64L, 96L, 128L, 256L}) {
      for (const char* spec : {"const:0", "affine:1,1"}) {
        const auto g = rates::CounterFunction::parse(spec);
        rates::PhiEvaluator ev(params, Rational(e), g, 1'000'000);
        bool ok = true;
        try {
          const Natural phi = ev.phi();
          const auto& tr = ev.trace();
          for (const auto& [l, th] : tr.theta) ok = ok && th >= tr.n.at(l);
          for (const auto& [l, fl] : tr.f) ok = ok && fl >= l;
          ok = ok && phi == *tr.K_star + params.moduli.S(frac(e * e, 16), *tr.K_star) + 1;
          ok = ok && phi >= *tr.K_star + 1 && *tr.K_star >= *tr.theta_star;
          const auto again = rates::phi_main(params, Rational(e), g, 1'000'000);
          determinism.record(again.value && *again.value == phi ? 0.0 : 1.0);
        } catch (const std::exception&) {
          ok = false;
        }
        pipeline.record(ok ? 0.0 : 1.0);
      }
    }
  }

  return {"rates", {product, zeta, psi_ge, tilde_monotone, pipeline, determinism}};
}

SuiteReport lemma_suite(const SuiteOptions& opts) {
  using rates::Natural;
  using rates::Rational;
  Sampler s(opts.seed + 4);
  const std::size_t n = std::min<std::size_t>(opts.samples, 100);

  auto qmcp = property("monotone_window_bound", 0.0);
  auto recurrence = property("recurrence_window_bound", 0.0);

  // Nonincreasing sequences in [0, b]: N in [l, bound] with a_N - a_{N+g(N)} <= eps.
  for (std::size_t i = 0; i < n; ++i) {
    rates::EvalBudget budget(1'000'000);
    const long b = static_cast<long>(s.index(1, 4));
    const Rational eps = frac(static_cast<long>(s.index(1, 8)), static_cast<long>(s.index(2, 8)));
    const auto g = s.index(0, 2) ? rates::CounterFunction::constant(s.index(0, 4))
                                 : rates::CounterFunction::affine(1, s.index(0, 2));
    const Natural l(static_cast<unsigned long>(s.index(0, 10)));
    const Natural bound = rates::qmcp_bound(Rational(b), eps, g, l, budget);
    if (bound > 200'000) {
      --i;
      continue;
    }
    const std::size_t hi = bound.get_ui();
    const std::size_t len = hi + g.majorant(bound, budget).get_ui() + 1;
    std::vector<double> a(len);
    double level = s.uniform(0.0, static_cast<double>(b));
    const double jump_rate = s.uniform(0.01, 0.5);
    for (auto& v : a) {
      v = level;
      if (s.uniform(0.0, 1.0) < jump_rate) level = std::max(0.0, level - s.uniform(0.0, 2.0 * eps.get_d()));
    }
    bool found = false;
    for (std::size_t N = l.get_ui(); N <= hi && !found; ++N) {
      const std::size_t end = N + g(Natural(static_cast<unsigned long>(N))).get_ui();
      found = a[N] - a[end] <= eps.get_d();
    }
    qmcp.record(found ? 0.0 : 1.0);
  }

  // a_{n+1} <= (1 - alpha_n) a_n + alpha_n beta_n + gamma_n with alpha_n = 1/(n + 2),
  // beta_n <= eps/4 and sum gamma_n <= eps/2: some N <= phi(eps, S, P, b) has
  // a_i <= eps on [N, N + g(N)].
  const auto moduli = rates::preset_moduli_reciprocal(2);
  for (std::size_t i = 0; i < n; ++i) {
    rates::EvalBudget budget(1'000'000);
    const long b = static_cast<long>(s.index(1, 3));
    const Rational eps = frac(static_cast<long>(s.index(1, 6)), 4);
    const auto g = s.index(0, 1) ? rates::CounterFunction::constant(s.index(0, 5))
                                 : rates::CounterFunction::affine(1, s.index(0, 3));
    const Natural P(static_cast<unsigned long>(s.index(0, 5)));
    const Natural phi = rates::phi_lfp(eps, moduli, P, Rational(b));
    const std::size_t hi = phi.get_ui();
    const std::size_t len = hi + g.majorant(phi, budget).get_ui() + 2;
    const double e = eps.get_d();
    std::vector<double> gammas(len);
    double mass = s.uniform(0.0, e / 2.0);
    for (auto& gm : gammas) {
      gm = mass * s.uniform(0.0, 0.5);
      mass -= gm;
    }
    std::vector<double> a(len);
    a[0] = s.uniform(0.0, static_cast<double>(b));
    for (std::size_t k = 0; k + 1 < len; ++k) {
      const double alpha = 1.0 / static_cast<double>(k + 2);
      const double beta = s.uniform(0.0, e / 4.0);
      const double next = (1.0 - alpha) * a[k] + alpha * beta + gammas[k];
      a[k + 1] = std::clamp(next * s.uniform(0.9, 1.0), 0.0, static_cast<double>(b));
    }
    bool found = false;
    for (std::size_t N = 0; N <= hi && !found; ++N) {
      const std::size_t end = N + g(Natural(static_cast<unsigned long>(N))).get_ui();
      found = std::all_of(a.begin() + static_cast<long>(N), a.begin() + static_cast<long>(end) + 1,
                          [&](double v) { return v <= e; });
    }
    recurrence.record(found ? 0.0 : 1.0);
  }

  return {"lemmas", {qmcp, recurrence}};
}

}  // namespace metaprox::harness
