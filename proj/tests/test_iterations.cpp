#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "metaprox/geometry.hpp"
#include "metaprox/iterations.hpp"

using namespace metaprox::geometry;
using namespace metaprox::operators;
using namespace metaprox::iterations;

namespace {

IterationConfig line_identity(std::size_t steps, Variant v = Variant::Halpern) {
  return IterationConfig{identity_family(),        StepSizes::constant(1.0),
                         WeightScheme::reciprocal(2), euclidean({1.0}),
                         euclidean({0.0}),         steps,
                         v};
}

double x1(const Point& p) { return as_euclidean(p).coords[0]; }

}  // namespace

TEST(Weights, Reciprocal) {
  const auto w = WeightScheme::reciprocal(2);
  EXPECT_DOUBLE_EQ(w.at(0), 0.5);
  EXPECT_DOUBLE_EQ(w.at(8), 0.1);
  EXPECT_FALSE(w.length().has_value());
  EXPECT_THROW(WeightScheme::reciprocal(0), std::invalid_argument);
}

TEST(Weights, ExplicitList) {
  const auto w = WeightScheme::explicit_list({1.0, 0.5});
  EXPECT_EQ(*w.length(), 2u);
  EXPECT_THROW(w.at(2), std::out_of_range);
  EXPECT_THROW(WeightScheme::explicit_list({0.0}), std::invalid_argument);
  EXPECT_THROW(WeightScheme::explicit_list({1.5}), std::invalid_argument);
}

TEST(Halpern, ZeroStepsKeepsStart) {
  const auto t = halpern_run(line_identity(0));
  ASSERT_EQ(t.points.size(), 1u);
  EXPECT_EQ(x1(t.points[0]), 0.0);
}

TEST(Halpern, IdentityOnTheLineGivesNOverNPlusOne) {
  const auto t = halpern_run(line_identity(50));
  ASSERT_EQ(t.points.size(), 51u);
  EXPECT_NEAR(x1(t.points[1]), 0.5, 1e-15);
  EXPECT_NEAR(x1(t.points[2]), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(x1(t.points[3]), 0.75, 1e-15);
  for (std::size_t n = 0; n <= 50; ++n) EXPECT_NEAR(x1(t.points[n]), n / (n + 1.0), 1e-13);
}

TEST(Tikhonov, IdentityOnTheLine) {
  const auto t = tikhonov_run(line_identity(2, Variant::Tikhonov));
  EXPECT_NEAR(x1(t.points[1]), 0.5, 1e-15);
  EXPECT_NEAR(x1(t.points[2]), 2.0 / 3.0, 1e-15);
  EXPECT_EQ(run(line_identity(2, Variant::Tikhonov)).points.size(), 3u);
}

TEST(Tikhonov, ShadowSequenceIsAHalpernRun) {
  const Point u = half_plane(1, 2);
  const auto fam = projection_family(semicircle(3, 2));
  const auto steps = StepSizes::constant(1.0);
  IterationConfig tik{fam, steps, WeightScheme::reciprocal(2), u, half_plane(4, 5), 30, Variant::Tikhonov};
  const auto y = tikhonov_run(tik);

  // x_n := combine(u, y_n, 1 - beta_n) follows Halpern with alpha_n = beta_{n+1}.
  const Point x0 = combine(u, y.points[0], 1.0 - 0.5);
  IterationConfig hal{fam, steps, WeightScheme::reciprocal(3), u, x0, 29, Variant::Halpern};
  const auto x = halpern_run(hal);
  for (std::size_t n = 0; n < x.points.size(); ++n) {
    const Point shadow = combine(u, y.points[n], 1.0 - 1.0 / (n + 2.0));
    EXPECT_LT(distance(shadow, x.points[n]), 1e-12) << "n=" << n;
  }
}

TEST(Diagnostics, ResidualAndDistanceToLimit) {
  auto cfg = line_identity(5);
  auto t = halpern_run(cfg);
  attach_diagnostics(t, cfg, euclidean({1.0}));
  ASSERT_EQ(t.diagnostics.size(), 6u);
  EXPECT_EQ(t.diagnostics[3].residual, 0.0);
  EXPECT_NEAR(*t.diagnostics[3].to_limit, 0.25, 1e-15);
}

TEST(AnchoredPoint, IdentityReturnsAnchor) {
  const Point u = half_plane(0.5, 2);
  const auto z = as_half_plane(anchored_point([](const Point& p) { return p; }, u, 0.3));
  EXPECT_NEAR(z.x, 0.5, 1e-10);
  EXPECT_NEAR(z.y, 2.0, 1e-10);
}

TEST(AnchoredPoint, ConstantMapIsLinear) {
  const Point c = euclidean({4, 0});
  const auto z = as_euclidean(anchored_point([c](const Point&) { return c; }, euclidean({0, 2}), 0.25));
  EXPECT_NEAR(z.coords[0], 3.0, 1e-10);
  EXPECT_NEAR(z.coords[1], 0.5, 1e-10);
}

TEST(AnchoredPoint, ApproachesProjectionForSmallT) {
  const auto T = projection_family(vertical_ray(2)).at(1.0);
  const auto z = as_half_plane(anchored_point(T, half_plane(1, 2), 1e-4));
  EXPECT_NEAR(z.x, 2.0, 1e-2);
  EXPECT_NEAR(z.y, std::sqrt(5.0), 1e-2);
}

TEST(AnchoredPoint, RejectsBadParameter) {
  auto T = [](const Point& p) { return p; };
  EXPECT_THROW(anchored_point(T, half_plane(0, 1), 0.0), std::invalid_argument);
  EXPECT_THROW(anchored_point(T, half_plane(0, 1), 1.0), std::invalid_argument);
}

TEST(ResolventCurve, InequalityAtTheCurvePoint) {
  const auto T = projection_family(vertical_ray(2)).at(1.0);
  const Point u = half_plane(1, 2);
  const Point z = anchored_point(T, u, 0.3);
  EXPECT_TRUE(curve_inequality_check(T, u, 0.3, z).holds);
}

TEST(ResolventCurve, RandomPointsForRayProjection) {
  const auto T = projection_family(vertical_ray(2)).at(1.0);
  const Point u = half_plane(1, 2);
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> ux(-4, 6), ly(-2, 2);
  for (int i = 0; i < 1000; ++i) {
    const Point x = half_plane(ux(rng), std::exp(ly(rng)));
    EXPECT_TRUE(curve_inequality_check(T, u, 0.3, x).holds);
  }
}

TEST(ResolventCurve, EuclideanIdentity) {
  const auto e = curve_inequality_check([](const Point& p) { return p; }, euclidean({1, 1}), 0.5,
                                           euclidean({-2, 3}));
  EXPECT_TRUE(e.holds);
  // z_t = u makes the second vector degenerate.
  EXPECT_NEAR(e.lhs, 0.0, 1e-9);
}
