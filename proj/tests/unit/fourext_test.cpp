#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fextlab/errors.hpp"
#include "fextlab/fourext/extension.hpp"

using namespace fextlab;
using mp::MpComplex;
using mp::MpReal;

namespace {

Function exp_fn() {
  return Function::real("exp", [](const auto& x) {
    using std::exp;
    return exp(x);
  });
}

std::vector<double> grid(int count) {
  std::vector<double> g;
  for (int i = 0; i < count; ++i) g.push_back(-1.0 + 2.0 * i / (count - 1));
  return g;
}

}  // namespace

TEST(FEProblem, PrecisionPolicy) {
  EXPECT_EQ(FEProblem::default_precision(5), 256);
  EXPECT_EQ(FEProblem::default_precision(129), 24 * 129);
  EXPECT_EQ(FEProblem::with_N(2.0, 33).n, 16);
  EXPECT_EQ(FEProblem::with_N(2.0, 33, 512).precision_bits, 512);
}

TEST(FEProblem, ValidateRejectsBadInput) {
  FEProblem p = FEProblem::with_N(1.0, 5);
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p.T = 2.0;
  p.a = 1.0;
  p.b = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Gram, EntriesAreSinc) {
  const auto G = build_gram(2.0, 5, 128);
  EXPECT_EQ(G.size(), 5u);
  EXPECT_EQ(G.entry(2, 2).to_double(), 1.0);
  EXPECT_NEAR(G.entry(0, 1).to_double(), std::sin(std::numbers::pi / 2) / (std::numbers::pi / 2), 1e-16);
  EXPECT_NEAR(G.entry(3, 1).to_double(), 0.0, 1e-30);
}

TEST(Rhs, ConstantFunctionHasClosedForm) {
  // b_k = sqrt(T/2) int exp(-i pi k x / T) dx = sqrt(T/2) 2 sinc(pi k / T).
  const auto f = Function::real("one", [](const auto& x) { return x * 0.0 + 1.0; });
  FEProblem p = FEProblem::with_N(2.43, 7);
  const auto b = build_rhs(f, p);
  const MpReal pi = MpReal::pi(p.precision_bits);
  for (int k = -3; k <= 3; ++k) {
    const MpReal T(2.43, p.precision_bits);
    const MpReal ref = sqrt(T / 2.0) * 2.0 * mp::sinc(pi * MpReal(static_cast<long>(k), p.precision_bits) / T);
    EXPECT_LT(abs(b[static_cast<std::size_t>(k + 3)] - MpComplex(ref)).to_double(), 1e-60) << k;
  }
}

TEST(Fit, ConstantIsReproduced) {
  const auto f = Function::real("one", [](const auto& x) { return x * 0.0 + 1.0; });
  const Extension e = fit(f, FEProblem::with_N(2.0, 5));
  EXPECT_LT(abs(e.coefficient(0) - MpComplex(MpReal(1.0, 256))).to_double(), 1e-60);
  EXPECT_LT(abs(e.coefficient(2)).to_double(), 1e-60);
  EXPECT_LT(sup_error(f, e, grid(101)), 1e-30);
}

TEST(Fit, ExpMatchesIndependentGramSolve) {
  // Solution of the 5x5 Gram system for e^x with T = 2 (mpmath, 50 digits).
  const Extension e = fit(exp_fn(), FEProblem::with_N(2.0, 5));
  const int bits = e.precision();
  const auto ref = [bits](const char* re, const char* im) {
    return MpComplex(MpReal::from_string(re, bits), MpReal::from_string(im, bits));
  };
  const MpComplex c0 = ref("1.6166369909116285136367965541248203", "0");
  const MpComplex c1 = ref("-0.34670286443203970080455347042460934", "-0.56069273437841798984635095615088683");
  const MpComplex c2 = ref("0.039027145695747516555093663836107116", "0.13626768286981293129051566660226613");
  EXPECT_LT(abs(e.coefficient(0) - c0).to_double(), 1e-33);
  EXPECT_LT(abs(e.coefficient(1) - c1).to_double(), 1e-33);
  EXPECT_LT(abs(e.coefficient(2) - c2).to_double(), 1e-33);
  EXPECT_LT(abs(e.coefficient(-1) - mp::conj(c1)).to_double(), 1e-33);
}

TEST(Fit, ErrorDecreasesWithN) {
  double previous = 1.0;
  for (int N : {5, 9, 13, 17}) {
    const double err = sup_error(exp_fn(), fit(exp_fn(), FEProblem::with_N(2.0, N)), grid(201));
    EXPECT_LT(err, previous);
    previous = err;
  }
  // About rho^-n with rho near 5 for T = 2, n = (N - 1) / 2.
  EXPECT_LT(previous, 1e-5);
}

TEST(Fit, L2ErrorIsMinimalAgainstPerturbation) {
  const Function f = exp_fn();
  const Extension e = fit(f, FEProblem::with_N(2.0, 7));
  const double best = error_norms(f, e, grid(101)).l2;
  mp::CVector c = e.coefficients();
  c[3].re += 1e-6;
  const double perturbed = error_norms(f, Extension(2.0, c), grid(101)).l2;
  EXPECT_GT(perturbed, best);
}

TEST(Fit, MappedIntervalMatchesManualMap) {
  auto f = Function::real("sq", [](const auto& x) { return x * x; });
  FEProblem p = FEProblem::with_N(2.0, 9);
  p.a = 0.0;
  p.b = 0.5;
  const Extension e = fit(f, p);
  const Function g = f.mapped_from(0.0, 0.5);
  // g(t) = ((t + 1) / 4)^2.
  EXPECT_NEAR(g(0.2).real(), std::pow(1.2 / 4.0, 2), 1e-16);
  EXPECT_LT(sup_error(g, e, grid(101)), 1e-3);
}

TEST(Fit, SlicedMatchesDirect) {
  const Function f = exp_fn();
  const ProlateSystem big = assemble(f, FEProblem::with_N(2.0, 21));
  const Extension a = fit_sliced(big, 4, f);
  const Extension b = fit(f, FEProblem::with_N(2.0, 9));
  for (int k = -4; k <= 4; ++k) EXPECT_LT(abs(a.coefficient(k) - b.coefficient(k)).to_double(), 1e-40);
}

TEST(Extension, DerivativeMatchesFiniteDifference) {
  const Extension e = fit(exp_fn(), FEProblem::with_N(2.0, 11));
  const double h = 1e-6;
  const double fd = (e.evaluate(0.3 + h) - e.evaluate(0.3 - h)).real() / (2 * h);
  EXPECT_NEAR(e.derivative(0.3).real(), fd, 1e-8);
  EXPECT_NEAR(e.derivative(0.3).real(), std::exp(0.3), 5e-3);
}

TEST(Extension, SumAddsCoefficients) {
  const Extension e = fit(exp_fn(), FEProblem::with_N(2.0, 5));
  const Extension s = e + e;
  EXPECT_NEAR(s.evaluate(0.1).real(), 2.0 * e.evaluate(0.1).real(), 1e-14);
}

TEST(Regularized, SmallEpsilonReproducesExactSolve) {
  const ProlateSystem sys = assemble(exp_fn(), FEProblem::with_N(2.0, 9));
  const auto eig = mp::jacobi_eigen(sys.G, sys.problem.precision_bits);
  const Extension exact = solve_exact(sys);
  const Extension reg = solve_regularized(sys, eig, eig.eigenvalues.back().to_double() / 4.0);
  EXPECT_EQ(reg.retained_count, 9u);
  for (int k = -4; k <= 4; ++k) EXPECT_LT(abs(exact.coefficient(k) - reg.coefficient(k)).to_double(), 1e-50);
}

TEST(Regularized, LargeEpsilonDropsModes) {
  const ProlateSystem sys = assemble(exp_fn(), FEProblem::with_N(2.0, 21));
  const Extension reg = solve_regularized(sys, 1e-8);
  EXPECT_LT(reg.retained_count, 21u);
  EXPECT_TRUE(reg.epsilon.has_value());
  EXPECT_LT(sup_error(exp_fn(), reg, grid(201)), 1e-3);
}
