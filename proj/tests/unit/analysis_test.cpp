#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fextlab/analysis/bernstein.hpp"
#include "fextlab/analysis/fit.hpp"
#include "fextlab/analysis/lebesgue.hpp"
#include "fextlab/analysis/modulus.hpp"
#include "fextlab/analysis/periodic.hpp"
#include "fextlab/analysis/remez.hpp"
#include "fextlab/errors.hpp"

using namespace fextlab;
using namespace fextlab::analysis;

namespace {

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> g;
  for (int i = 0; i < count; ++i) g.push_back(lo + (hi - lo) * i / (count - 1));
  return g;
}

}  // namespace

TEST(Fit, LinearAndLogLog) {
  const auto l = linear_fit({1, 2, 3, 4}, {3, 5, 7, 9});
  EXPECT_NEAR(l.slope, 2.0, 1e-14);
  EXPECT_NEAR(l.intercept, 1.0, 1e-14);
  EXPECT_NEAR(l.residual, 0.0, 1e-14);
  const auto p = loglog_fit({10, 20, 40}, {1e-2, 2.5e-3, 6.25e-4});
  EXPECT_NEAR(p.slope, -2.0, 1e-12);
  EXPECT_THROW(linear_fit({1}, {1}), std::invalid_argument);
}

TEST(Fit, UpperEnvelopeAndBandRatio) {
  const auto env = upper_envelope({5, 1, 3, 0.5, 2, 0.1});
  EXPECT_EQ(env, (std::vector<double>{5, 3, 3, 2, 2, 0.1}));
  EXPECT_DOUBLE_EQ(band_ratio({2, 4, 3}), 2.0);
}

TEST(Lebesgue, TEqualOneGivesFourierLebesgueConstants) {
  // (1/pi) int_0^pi |sin((n + 1/2) t) / sin(t / 2)| dt (mpmath, 20 digits).
  const struct {
    int N;
    double L;
  } ref[] = {{5, 1.6421884352221211369}, {11, 1.9613605937660149475}};
  const arc::ArcRecurrence rec(build_arc_basis(1.0, 11));
  for (const auto& r : ref) {
    for (double x : {0.0, 0.3, 1.0}) {
      EXPECT_NEAR(lebesgue_function(x, r.N, rec).value, r.L, 1e-8) << r.N << " " << x;
    }
  }
}

TEST(Lebesgue, SymmetricAndAboveOne) {
  const arc::ArcRecurrence rec(build_arc_basis(2.0, 17));
  const double a = lebesgue_function(0.4, 17, rec).value;
  const double b = lebesgue_function(-0.4, 17, rec).value;
  EXPECT_NEAR(a, b, 1e-8 * a);
  EXPECT_GT(a, 1.0);
  EXPECT_GT(lebesgue_function(1.0, 17, rec).value, a);
}

TEST(Lebesgue, GrowthFitScaling) {
  const auto g = lebesgue_growth_fit({16, 64, 256, 1024}, {4.0, 8.0, 16.0, 32.0}, true);
  EXPECT_TRUE(g.endpoint);
  EXPECT_NEAR(g.band_ratio, 1.0, 1e-12);
}

TEST(Modulus, SineIsBoundedByClosedForm) {
  // The grid value lies between the modulus at delta - h and at delta.
  const RealFn f = [](double x) { return std::sin(x); };
  for (double d : {0.5, 0.1, 0.01}) {
    const auto m = modulus(f, d);
    const double h = 2.0 / static_cast<double>(1 << m.level);
    EXPECT_TRUE(m.converged) << d;
    EXPECT_LE(m.value, 2.0 * std::sin(d / 2.0) * (1.0 + 1e-12)) << d;
    EXPECT_GE(m.value, 2.0 * std::sin((d - h) / 2.0) * (1.0 - 1e-12)) << d;
  }
}

TEST(Modulus, SquareRootIsExactForDyadicDelta) {
  const RealFn f = [](double x) { return std::sqrt(std::abs(x)); };
  for (double d : {0.25, 0x1p-10}) EXPECT_NEAR(modulus(f, d).value, std::sqrt(d), 1e-14) << d;
  const auto m = modulus(f, 1e-3);
  EXPECT_GE(m.value, std::sqrt(1e-3 - 2.0 / static_cast<double>(1 << m.level)) * (1.0 - 1e-12));
}

TEST(Modulus, WeightedModulusOfCapIsLinear) {
  const RealFn f = [](double x) { return std::sqrt(1.0 - x * x); };
  std::vector<double> ratios;
  for (double d : {0.1, 0.01, 0.001}) ratios.push_back(weighted_modulus(f, d).value / d);
  EXPECT_LT(band_ratio(ratios), 2.0);
  // The plain modulus only decays like sqrt(delta).
  EXPECT_NEAR(modulus(f, 1e-4).value / std::sqrt(1e-4), std::sqrt(2.0), 0.05);
}

TEST(Periodic, MatchesFunctionAndIsPeriodic) {
  const auto f = [](double x) { return std::exp(x); };
  const auto p = periodic_extension(f, 2, 2.0, {f, f});
  EXPECT_NEAR(p(0.3), std::exp(0.3), 1e-15);
  EXPECT_NEAR(p(0.3 + 4.0), std::exp(0.3), 1e-12);
  // Continuous with continuous first derivative across x = 1.
  const double h = 1e-6;
  EXPECT_NEAR(p(1.0 + h), std::exp(1.0), 1e-5);
  EXPECT_NEAR((p(1.0 + h) - p(1.0)) / h, std::exp(1.0), 1e-4);
  EXPECT_NEAR(p(3.0 - h), std::exp(-1.0), 1e-5);
}

TEST(Periodic, FiniteDifferenceDerivatives) {
  const auto f = [](double x) { return std::cos(2 * x); };
  const auto exact = periodic_extension(f, 1, 2.0, {[](double x) { return -2 * std::sin(2 * x); }});
  const auto approx = periodic_extension(f, 1, 2.0);
  for (double x : {1.5, 2.0, 2.7}) EXPECT_NEAR(exact(x), approx(x), 1e-6);
}

TEST(Remez, AbsoluteValueAgreesWithLinearProgram) {
  // Discrete minimax error on 2001 equispaced points from an independent LP.
  RemezOptions opts;
  opts.grid = linspace(-1.0, 1.0, 2001);
  const auto r = remez([](double x) { return std::abs(x); }, 5, 2.0, opts);
  EXPECT_NEAR(r.E, 0.060716396778254, 1e-9);
}

TEST(Remez, EquioscillatesAtNPlusOnePoints) {
  const auto r = remez([](double x) { return std::abs(x); }, 9, 2.0);
  ASSERT_EQ(r.alternation_points.size(), 10u);
  for (std::size_t i = 0; i < r.alternation_errors.size(); ++i) {
    EXPECT_NEAR(std::abs(r.alternation_errors[i]), r.E, 1e-8 * r.E);
    if (i > 0) EXPECT_LT(r.alternation_errors[i] * r.alternation_errors[i - 1], 0.0);
  }
}

TEST(Remez, ElementOfSpaceHasZeroError) {
  const auto r = remez([](double x) { return std::cos(std::numbers::pi * x / 2.0) + 0.5; }, 3, 2.0);
  EXPECT_LT(r.E, 1e-12);
}

TEST(Remez, TrigCoefficientsReproduceSeries) {
  const auto r = remez([](double x) { return std::exp(x); }, 7, 2.0);
  const auto ext = r.best.to_extension(256);
  for (double x : {-0.9, 0.0, 0.45, 1.0}) EXPECT_NEAR(ext.evaluate(x).real(), r.best(x), 1e-13);
}

TEST(Bernstein, PhiAndBounds) {
  EXPECT_NEAR(phi_videnskii(0.0, 2.0), std::sin(std::numbers::pi / 4), 1e-15);
  EXPECT_NEAR(phi_videnskii(1.0, 2.0), 0.0, 1e-15);
  EXPECT_NEAR(BernsteinRatios::videnskii_bound(2.0), std::numbers::pi / 2.0, 1e-15);
  EXPECT_GT(BernsteinRatios::relaxed_bound(2.0), BernsteinRatios::videnskii_bound(2.0));
}

TEST(Bernstein, TopFrequencyStaysBelowBound) {
  // r(x) = sin(n pi x / T), n = 6.
  const int n = 6;
  const int bits = 128;
  mp::CVector c(2 * n + 1, mp::MpComplex::zero(bits));
  c[0] = mp::MpComplex({0.0, 0.5}, bits);
  c[2 * n] = mp::MpComplex({0.0, -0.5}, bits);
  const auto r = bernstein_check(Extension(2.0, c), linspace(-1.0, 1.0, 2001));
  EXPECT_NEAR(r.sup_norm, 1.0, 1e-6);
  EXPECT_LE(r.videnskii, BernsteinRatios::videnskii_bound(2.0) + 1e-10);
  EXPECT_LE(r.relaxed, BernsteinRatios::relaxed_bound(2.0) + 1e-10);
}
