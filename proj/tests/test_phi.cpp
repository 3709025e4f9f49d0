#include <gtest/gtest.h>

#include <string>

#include "metaprox/rates/phi.hpp"
#include "support/reference_phi.hpp"

using namespace metaprox::rates;
using metaprox::testing::reference_phi;
using metaprox::testing::reference_theta;

namespace {

Rational q(long p, long d) { return Rational(p) / d; }

CounterFunction g_of(const std::string& spec) { return CounterFunction::parse(spec); }

struct Frozen {
  long eps;
  const char* g;
  long k_star;
  long K_star;
  long phi;
};

// b = 1, gamma = 1, gamma~ = 1, alpha~_n = 1/(n+2), reciprocal moduli with offset 2.
constexpr Frozen kFrozen[] = {
    {64, "const:0", 5, 983038, 1966077},
    {96, "const:0", 3, 14, 29},
    {96, "affine:1,1", 3, 84, 169},
    {128, "const:0", 3, 6, 13},
    {128, "affine:1,1", 3, 20, 41},
    {256, "const:0", 3, 6, 13},
    {256, "affine:1,1", 3, 20, 41},
    {512, "const:0", 3, 6, 13},
    {512, "affine:1,1", 3, 20, 41},
};

}  // namespace

TEST(Phi, FrozenValues) {
  for (const auto& f : kFrozen) {
    const auto r = phi_main(RateParams{}, Rational(f.eps), g_of(f.g));
    ASSERT_TRUE(r.ok()) << f.eps << " " << f.g << ": " << r.trace.failure.value_or("");
    EXPECT_EQ(*r.trace.k_star, Natural(f.k_star)) << f.eps << " " << f.g;
    EXPECT_EQ(*r.trace.K_star, Natural(f.K_star)) << f.eps << " " << f.g;
    EXPECT_EQ(*r.value, Natural(f.phi)) << f.eps << " " << f.g;
  }
}

TEST(Phi, LargeValueIsExact) {
  const auto r = phi_main(RateParams{}, Rational(64), g_of("affine:1,1"));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(*r.trace.k_star, Natural(29));
  EXPECT_EQ(to_string(*r.value).size(), 305u);
}

TEST(Phi, HandCheckedTrace) {
  const auto r = phi_main(RateParams{}, Rational(128), g_of("const:0"));
  ASSERT_TRUE(r.ok());
  const auto& t = r.trace;
  EXPECT_EQ(t.C, Rational(3));
  EXPECT_EQ(t.eps_hat, Rational(128));
  EXPECT_EQ(*t.c, Natural(1));
  EXPECT_EQ(*t.xi_count, Natural(1));
  EXPECT_EQ(*t.k_star, Natural(3));
  EXPECT_EQ(*t.theta_star, Natural(2));
  EXPECT_EQ(*t.K_star, Natural(6));
  EXPECT_EQ(*t.phi, Natural(13));
  EXPECT_EQ(t.f.at(Natural(2)), Natural(2));
  EXPECT_EQ(t.evaluations, 15u);
}

TEST(Phi, GHatForZeroCounter) {
  // eps = 2, b = 1: S(1/4, l) = 4l + 2.
  PhiEvaluator ev(RateParams{}, Rational(2), g_of("const:0"));
  const long expect[] = {2, 6, 10};
  for (long l = 0; l < 3; ++l) {
    EXPECT_EQ(ev.S16(Natural(l)), Natural(expect[l]));
    EXPECT_EQ(ev.g_hat(Natural(l)), Natural(expect[l]));
    EXPECT_EQ(ev.g_prime(Natural(l)), Natural(expect[l] + 2));
  }
}

TEST(Phi, IndividualQuantities) {
  PhiEvaluator ev(RateParams{}, Rational(2), g_of("const:0"));
  EXPECT_EQ(ev.C(), Rational(3));
  EXPECT_EQ(ev.eps_hat(), q(1, 32));
  EXPECT_EQ(ev.c(), Natural(16));
  EXPECT_EQ(ev.eta(Natural(1)), q(1, 48));
  EXPECT_THROW(ev.eta(Natural(0)), std::domain_error);
  // M1(1) = min(omega(1/144)/2, omega(1/32), 1/32)
  EXPECT_EQ(ev.M1(Natural(1)), q(1, 144 * 144 * 30));
  EXPECT_EQ(ev.rho_tilde(Rational(1), Natural(5)), Natural(3));
}

TEST(Phi, ThetaAndFAreInflationary) {
  PhiEvaluator ev(RateParams{}, Rational(96), g_of("affine:1,1"));
  for (long l = 1; l < 6; ++l) {
    for (long i = 0; i < 6; ++i) EXPECT_GE(ev.theta(Natural(l), Natural(i)), Natural(i));
    EXPECT_GE(ev.f(Natural(l)), Natural(l));
  }
  const auto value = ev.phi();
  EXPECT_GE(value, *ev.trace().K_star + 1);
}

TEST(Phi, AgreesWithReferenceOnTractableInstances) {
  for (long eps : {96, 128, 256, 512}) {
    for (const char* g : {"const:0", "affine:1,1", "const:3"}) {
      const auto fast = phi_main(RateParams{}, Rational(eps), g_of(g));
      const auto ref = reference_phi(RateParams{}, Rational(eps), g_of(g), 10'000'000);
      ASSERT_TRUE(fast.ok()) << eps << " " << g;
      ASSERT_TRUE(ref.phi.has_value()) << eps << " " << g << ": " << ref.failure.value_or("");
      EXPECT_EQ(*fast.value, *ref.phi) << eps << " " << g;
      EXPECT_EQ(*fast.trace.k_star, *ref.k_star) << eps << " " << g;
      EXPECT_EQ(*fast.trace.K_star, *ref.K_star) << eps << " " << g;
    }
  }
}

TEST(Phi, AgreesWithReferenceForOtherParameters) {
  RateParams p;
  p.b = 2;
  p.gamma = q(1, 2);
  p.gamma_upper = RationalSequence::parse("list:1,3/2;tail=1");
  p.alpha_lower = RationalSequence::reciprocal(3);
  p.moduli = preset_moduli_reciprocal(3);
  for (long eps : {512, 1024}) {
    const auto fast = phi_main(p, Rational(eps), g_of("const:1"));
    const auto ref = reference_phi(p, Rational(eps), g_of("const:1"), 10'000'000);
    ASSERT_TRUE(fast.ok());
    ASSERT_TRUE(ref.phi.has_value()) << ref.failure.value_or("");
    EXPECT_EQ(*fast.value, *ref.phi) << eps;
  }
}

TEST(Phi, SmallEpsilonRunsOutOfBudgetWithPartialTrace) {
  const auto r = phi_main(RateParams{}, Rational(2), g_of("const:0"), 100'000);
  EXPECT_FALSE(r.ok());
  ASSERT_TRUE(r.trace.failure.has_value());
  EXPECT_EQ(r.trace.C, Rational(3));
  EXPECT_EQ(r.trace.eps_hat, q(1, 32));
  EXPECT_EQ(*r.trace.c, Natural(16));
  EXPECT_LE(r.trace.evaluations, 100'000u);
}

TEST(Phi, Deterministic) {
  const auto a = phi_main(RateParams{}, Rational(96), g_of("affine:1,1"));
  const auto b = phi_main(RateParams{}, Rational(96), g_of("affine:1,1"));
  EXPECT_EQ(*a.value, *b.value);
  EXPECT_EQ(a.trace.evaluations, b.trace.evaluations);
  EXPECT_EQ(a.trace.f, b.trace.f);
}

TEST(Phi, RejectsInvalidInput) {
  EXPECT_THROW(phi_main(RateParams{}, Rational(0), g_of("const:0")), std::invalid_argument);
  RateParams p;
  p.gamma = -1;
  EXPECT_THROW(phi_main(p, Rational(1), g_of("const:0")), std::invalid_argument);
}

TEST(Theta, ShiftedCounterFunction) {
  const auto h = tikhonov_counter(CounterFunction::identity());
  for (long n = 0; n < 3; ++n) EXPECT_EQ(h(Natural(n)), Natural(n + 1));
}

TEST(Theta, IsShiftedPhiPlusOne) {
  for (long eps : {256, 512}) {
    const auto g = g_of("const:0");
    const auto theta = theta_tikhonov(RateParams{}, Rational(eps), g);
    const auto phi = phi_main(tikhonov_params(RateParams{}), Rational(eps / 2), tikhonov_counter(g));
    ASSERT_TRUE(theta.ok());
    ASSERT_TRUE(phi.ok());
    EXPECT_EQ(*theta.value, *phi.value + 1);
    EXPECT_GE(*theta.value, Natural(2));
  }
}

TEST(Theta, AgreesWithReference) {
  for (long eps : {256, 512, 1024}) {
    for (const char* g : {"const:0", "affine:1,1"}) {
      const auto fast = theta_tikhonov(RateParams{}, Rational(eps), g_of(g));
      const auto ref = reference_theta(RateParams{}, Rational(eps), g_of(g), 10'000'000);
      ASSERT_TRUE(fast.ok()) << eps << " " << g;
      ASSERT_TRUE(ref.phi.has_value()) << eps << " " << g;
      EXPECT_EQ(*fast.value, *ref.phi) << eps << " " << g;
    }
  }
}
