#include <gtest/gtest.h>

#include "metaprox/harness/properties.hpp"
#include "metaprox/harness/selftest.hpp"

using namespace metaprox::harness;

namespace {

SuiteOptions small(std::size_t n = 500) {
  SuiteOptions o;
  o.samples = n;
  return o;
}

void expect_passed(const SuiteReport& r) {
  for (const auto& p : r.properties) {
    EXPECT_TRUE(p.passed()) << r.name << "/" << p.name << " worst=" << p.worst;
    EXPECT_FALSE(p.skipped()) << r.name << "/" << p.name;
  }
}

}  // namespace

TEST(Suites, GeometryPasses) { expect_passed(geometry_suite(small())); }
TEST(Suites, OperatorsPass) { expect_passed(operator_suite(small())); }
TEST(Suites, IterationsPass) { expect_passed(iteration_suite(small(100))); }
TEST(Suites, RatesPass) { expect_passed(rates_suite(small(100))); }
TEST(Suites, LemmasPass) { expect_passed(lemma_suite(small(100))); }

TEST(Suites, SeedChangesSamplesNotVerdicts) {
  auto o = small();
  o.seed = 99;
  expect_passed(geometry_suite(o));
}

TEST(Suites, PerturbedDistanceIsCaught) {
  auto o = small();
  o.distance = perturbed_distance(1e-6);
  const auto r = geometry_suite(o);
  EXPECT_FALSE(r.passed());
  EXPECT_GT(r.find("cat0_inequality")->failures, 0u);
}

TEST(Suites, ZeroSamplesSkips) {
  const auto r = geometry_suite(small(0));
  EXPECT_TRUE(r.skipped());
  EXPECT_TRUE(r.passed());
}

TEST(Suites, RotationCounterexampleIsReported) {
  const auto r = operator_suite(small(10));
  const auto* p = r.find("rotation_not_p2");
  ASSERT_NE(p, nullptr);
  EXPECT_TRUE(p->passed());
  EXPECT_EQ(p->samples, 1u);
}
