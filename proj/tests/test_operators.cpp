#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "metaprox/errors.hpp"
#include "metaprox/geometry.hpp"
#include "metaprox/operators.hpp"

using namespace metaprox::geometry;
using namespace metaprox::operators;

namespace {

std::vector<std::pair<Point, Point>> half_plane_pairs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-6, 6), ly(-2, 2);
  std::vector<std::pair<Point, Point>> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(half_plane(ux(rng), std::exp(ly(rng))), half_plane(ux(rng), std::exp(ly(rng))));
  }
  return out;
}

Map rotation() {
  return [](const Point& p) {
    const auto& c = as_euclidean(p).coords;
    return euclidean({-c[1], c[0]});
  };
}

Map identity() {
  return [](const Point& p) { return p; };
}

}  // namespace

TEST(Resolvent, IdentityFixesEveryPoint) {
  const auto fam = resolvent_family(identity());
  const Point p = half_plane(1.5, 0.3);
  const auto q = as_half_plane(fam.apply(7.0, p));
  EXPECT_NEAR(q.x, 1.5, 1e-12);
  EXPECT_NEAR(q.y, 0.3, 1e-12);
  EXPECT_EQ(identity_family().apply(2.0, p), p);
}

TEST(Resolvent, ConstantMapAveragesAtUnitStep) {
  const Point c = euclidean({4, -2});
  const auto fam = resolvent_family([c](const Point&) { return c; });
  const auto z = as_euclidean(fam.apply(1.0, euclidean({0, 6})));
  EXPECT_NEAR(z.coords[0], 2.0, 1e-10);
  EXPECT_NEAR(z.coords[1], 2.0, 1e-10);
}

TEST(Prox, IsTheGeodesicPointAtGammaOverOnePlusGamma) {
  const Point c = half_plane(2, 1), p = half_plane(-1, 3);
  const auto got = as_half_plane(prox_family(c).apply(3.0, p));
  const auto expect = as_half_plane(combine(p, c, 0.75));
  EXPECT_NEAR(got.x, expect.x, 1e-12);
  EXPECT_NEAR(got.y, expect.y, 1e-12);
}

TEST(Prox, MinimizesTheProxObjectiveAlongTheGeodesic) {
  const Point c = half_plane(2, 1), p = half_plane(-1, 3);
  const double gamma = 3.0;
  auto objective = [&](const Point& z) {
    const double a = distance(z, c), b = distance(z, p);
    return 0.5 * a * a + b * b / (2 * gamma);
  };
  double best_t = 0, best = objective(p);
  for (int k = 1; k <= 100000; ++k) {
    const double t = k / 100000.0;
    const double v = objective(combine(p, c, t));
    if (v < best) best = v, best_t = t;
  }
  EXPECT_NEAR(best_t, 0.75, 1e-4);
}

TEST(Resolvent, RejectsNonPositiveStep) {
  EXPECT_THROW(prox_family(half_plane(0, 1)).apply(0.0, half_plane(0, 1)), std::invalid_argument);
}

TEST(Resolvent, SolverFailureIsReported) {
  const auto fam = resolvent_family([](const Point& p) { return euclidean({as_euclidean(p).coords[0] + 1}); },
                                    1e-12, 3);
  EXPECT_THROW(fam.apply(1.0, euclidean({0})), metaprox::SolverError);
}

TEST(P2, IdentityHolds) {
  const auto pairs = half_plane_pairs(100, 1);
  EXPECT_TRUE(check_P2(identity(), pairs).holds);
}

TEST(P2, RayProjectionHolds) {
  const auto pairs = half_plane_pairs(2000, 2);
  const auto r = check_P2(projection_family(vertical_ray(2)).at(1.0), pairs);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.checked, 2000u);
}

TEST(P2, RotationViolatesByTwo) {
  const std::vector<std::pair<Point, Point>> pairs = {{euclidean({1, 0}), euclidean({0, 0})}};
  const auto r = check_P2(rotation(), pairs);
  EXPECT_FALSE(r.holds);
  EXPECT_NEAR(r.worst_violation, 2.0, 1e-12);
}

TEST(MutualP2, IdentityPairHolds) {
  const auto pairs = half_plane_pairs(100, 3);
  EXPECT_TRUE(check_mutually_P2(identity(), identity(), 1.0, 2.5, pairs).holds);
}

TEST(MutualP2, ProxFamilyHolds) {
  const auto fam = prox_family(half_plane(0.5, 1.5));
  const auto pairs = half_plane_pairs(1000, 4);
  EXPECT_TRUE(check_mutually_P2(fam.at(1.0), fam.at(2.0), 1.0, 2.0, pairs).holds);
}

TEST(MutualP2, ProxAgainstRotationFails) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> n(0, 1);
  std::vector<std::pair<Point, Point>> pairs;
  for (int i = 0; i < 200; ++i) {
    pairs.emplace_back(euclidean({n(rng), n(rng)}), euclidean({n(rng), n(rng)}));
  }
  const auto prox = prox_family(euclidean({0.3, -0.2})).at(1.0);
  EXPECT_FALSE(check_mutually_P2(prox, rotation(), 1.0, 1.0, pairs).holds);
}

TEST(Displacement, EqualStepsGiveZeroGap) {
  const auto fam = prox_family(half_plane(0, 2));
  std::vector<Point> pts = {half_plane(1, 1), half_plane(-3, 0.2)};
  const auto r = displacement_bound_check(fam.at(1.5), fam.at(1.5), 1.5, 1.5, pts);
  EXPECT_TRUE(r.holds);
}

TEST(Displacement, ProxFamilyHolds) {
  const auto fam = prox_family(half_plane(0, 2));
  std::vector<Point> pts;
  for (const auto& [a, b] : half_plane_pairs(500, 5)) pts.push_back(a);
  EXPECT_TRUE(displacement_bound_check(fam.at(1.0), fam.at(3.0), 1.0, 3.0, pts).holds);
}

TEST(Displacement, CommonFixedPointHasZeroSides) {
  const Point c = half_plane(0, 2);
  const auto fam = prox_family(c);
  const std::vector<Point> pts = {c};
  const auto r = displacement_bound_check(fam.at(1.0), fam.at(4.0), 1.0, 4.0, pts);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.worst_violation, 0.0);
}

TEST(SqneModulus, IdentityIsVacuous) {
  const std::vector<Point> pts = {half_plane(0, 1), half_plane(1, 2)};
  EXPECT_TRUE(sqne_modulus_check(identity(), half_plane(0, 1.5), 4.0, 0.1, pts).holds);
}

TEST(SqneModulus, RayProjectionHolds) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> ux(-1, 5), ly(-1, 1);
  const Point p = half_plane(2, 1);
  std::vector<Point> pts;
  while (pts.size() < 2000) {
    const Point z = half_plane(ux(rng), std::exp(ly(rng)));
    if (distance(z, p) <= 4.0) pts.push_back(z);
  }
  EXPECT_TRUE(sqne_modulus_check(projection_family(vertical_ray(2)).at(1.0), p, 4.0, 0.1, pts).holds);
}

TEST(SqneModulus, LargeDisplacementForcesLargeGap) {
  // Contrapositive: d(z,Tz) >= eps must come with d(z,p) - d(Tz,p) >= eps^2/2b.
  const auto T = projection_family(vertical_ray(2)).at(1.0);
  const Point p = half_plane(2, 1);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ux(-1, 5), ly(-1, 1);
  int probed = 0;
  for (int i = 0; i < 5000; ++i) {
    const Point z = half_plane(ux(rng), std::exp(ly(rng)));
    if (distance(z, p) > 4.0 || distance(z, T(z)) < 0.1) continue;
    ++probed;
    EXPECT_GE(distance(z, p) - distance(T(z), p), 0.01 / 8.0 - 1e-12);
  }
  EXPECT_GT(probed, 100);
}

TEST(Quasiness, IdentityConclusionIsZero) {
  const auto e = quantitative_quasiness_check(identity(), half_plane(0, 1), half_plane(0.5, 1), 8.0, 0.5);
  EXPECT_TRUE(e.holds);
  EXPECT_EQ(e.conclusion, 0.0);
}

TEST(Quasiness, OmegaValue) {
  const auto e = quantitative_quasiness_check(identity(), half_plane(0, 1), half_plane(0, 1), 1.0, 1.0);
  EXPECT_NEAR(e.omega, 1.0 / 15.0, 1e-15);
}

TEST(Quasiness, ViolatedPremiseIsVacuous) {
  const auto T = projection_family(vertical_ray(2)).at(1.0);
  const auto e = quantitative_quasiness_check(T, half_plane(-2, 1), half_plane(2, 1), 8.0, 0.5);
  EXPECT_FALSE(e.premises_hold);
  EXPECT_TRUE(e.holds);
}

TEST(Quasiness, NearFixedPointOfSemicircleProjection) {
  const auto T = projection_family(semicircle(3, 2)).at(1.0);
  const Point p = half_plane(3.0, 2.0 + 1e-3);
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> ux(0, 6), ly(-0.5, 1.5);
  std::size_t premised = 0;
  for (int i = 0; i < 10000; ++i) {
    const Point z = half_plane(ux(rng), std::exp(ly(rng)));
    if (distance(z, p) > 8.0) continue;
    const auto e = quantitative_quasiness_check(T, z, p, 8.0, 0.5);
    EXPECT_TRUE(e.holds);
    premised += e.premises_hold;
  }
  EXPECT_GT(premised, 0u);
}

TEST(StepSizes, ConstantAndList) {
  const auto c = StepSizes::constant(2.0);
  EXPECT_EQ(c.at(0), 2.0);
  EXPECT_EQ(c.at(100), 2.0);
  EXPECT_EQ(c.lower(), 2.0);
  const auto l = StepSizes::explicit_list({3.0, 1.0, 2.0});
  EXPECT_EQ(l.at(5), 2.0);
  EXPECT_EQ(l.lower(), 1.0);
  EXPECT_THROW(StepSizes::explicit_list({}), std::invalid_argument);
  EXPECT_THROW(StepSizes::constant(-1.0), std::invalid_argument);
}
