#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fextlab/errors.hpp"
#include "fextlab/mpcore/linalg.hpp"
#include "fextlab/mpcore/quadrature.hpp"

using namespace fextlab;
using namespace fextlab::mp;

namespace {

MpMatrix random_spd(std::size_t n, int bits, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MpMatrix a(n, n, bits);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = MpReal(u(rng), bits);
  }
  MpMatrix s = a * a.transposed();
  for (std::size_t i = 0; i < n; ++i) s(i, i) += static_cast<double>(n);
  return s;
}

}  // namespace

TEST(MpReal, PiMatchesReferenceDigits) {
  const MpReal pi = MpReal::pi(256);
  const MpReal ref = MpReal::from_string("3.14159265358979323846264338327950288419716939937510582097494459", 256);
  EXPECT_LT(abs(pi - ref).to_double(), 1e-60);
}

TEST(MpReal, ArithmeticKeepsPrecision) {
  const MpReal third = MpReal::one(200) / 3.0;
  EXPECT_EQ(third.precision(), 200);
  EXPECT_LT(abs(third * 3.0 - 1.0).to_double(), 1e-59);
  EXPECT_LT(abs(sqrt(MpReal(2.0, 200)) * sqrt(MpReal(2.0, 200)) - 2.0).to_double(), 1e-58);
}

TEST(MpReal, SincAtZeroAndIntegers) {
  EXPECT_EQ(sinc(MpReal(0.0, 128)).to_double(), 1.0);
  EXPECT_LT(abs(sinc(MpReal::pi(128) * 3.0)).to_double(), 1e-37);
}

TEST(MpComplex, UnitAndAbs) {
  const MpComplex z = MpComplex::unit(MpReal(0.7, 128));
  EXPECT_LT(abs(abs(z) - 1.0).to_double(), 1e-37);
  EXPECT_NEAR(z.re.to_double(), std::cos(0.7), 1e-16);
}

TEST(Linalg, CholeskySolveMatchesGaussianElimination) {
  const int bits = 192;
  const MpMatrix a = random_spd(8, bits, 3);
  MpVector b;
  for (int i = 0; i < 8; ++i) b.emplace_back(static_cast<double>(i + 1), bits);
  const MpVector x1 = cholesky_solve(cholesky(a), b);
  const MpVector x2 = gauss_solve(a, b);
  for (std::size_t i = 0; i < x1.size(); ++i) EXPECT_LT(abs(x1[i] - x2[i]).to_double(), 1e-50);
}

TEST(Linalg, ToeplitzCholeskyMatchesDense) {
  MpVector row;
  for (int j = 0; j < 6; ++j) row.emplace_back(1.0 / (1.0 + j * j), 128);
  const HermitianToeplitz t(row);
  const MpMatrix l1 = cholesky(t);
  const MpMatrix l2 = cholesky(t.dense());
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j <= i; ++j) EXPECT_LT(abs(l1(i, j) - l2(i, j)).to_double(), 1e-35);
  }
}

TEST(Linalg, CholeskyRejectsIndefinite) {
  MpMatrix a(2, 2, 128);
  a(0, 0) = MpReal(1.0, 128);
  a(0, 1) = MpReal(2.0, 128);
  a(1, 0) = MpReal(2.0, 128);
  a(1, 1) = MpReal(1.0, 128);
  EXPECT_THROW(cholesky(a), NotPositiveDefinite);
}

TEST(Linalg, InvertLowerGivesIdentity) {
  const MpMatrix l = cholesky(random_spd(5, 128, 9));
  const MpMatrix p = l * invert_lower(l);
  EXPECT_LT((p - MpMatrix::identity(5, 128)).max_abs().to_double(), 1e-35);
}

TEST(Linalg, JacobiEigenReconstructs) {
  const MpMatrix a = random_spd(7, 160, 5);
  const auto eig = jacobi_eigen(a, 160);
  EXPECT_LT(reconstruction_residual(eig, a).to_double(), 1e-40);
  EXPECT_LT(orthogonality_residual(eig).to_double(), 1e-44);
  for (std::size_t i = 1; i < eig.eigenvalues.size(); ++i) EXPECT_GE(eig.eigenvalues[i - 1], eig.eigenvalues[i]);
}

TEST(Linalg, JacobiEigenOfDiagonal) {
  MpMatrix a(3, 3, 128);
  a(0, 0) = MpReal(2.0, 128);
  a(1, 1) = MpReal(5.0, 128);
  a(2, 2) = MpReal(-1.0, 128);
  const auto eig = jacobi_eigen(a, 128);
  EXPECT_EQ(eig.eigenvalues[0].to_double(), 5.0);
  EXPECT_EQ(eig.eigenvalues[2].to_double(), -1.0);
}

TEST(Quadrature, GaussLegendreIsExactForPolynomials) {
  const GaussRule& g = gauss_legendre(10, 256);
  // x^18 integrates to 2/19 with a 10-point rule.
  MpReal sum(0L, 256);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) sum += g.weights[i] * pow(g.nodes[i], 18L);
  EXPECT_LT(abs(sum - MpReal(2.0, 256) / 19.0).to_double(), 1e-70);
}

TEST(Quadrature, DoubleRuleMatchesMultiprecision) {
  const GaussRuleD& d = gauss_legendre_double(16);
  const GaussRule& g = gauss_legendre(16, 128);
  for (std::size_t i = 0; i < d.nodes.size(); ++i) EXPECT_DOUBLE_EQ(d.nodes[i], g.nodes[i].to_double());
}

TEST(Quadrature, GradedRuleHandlesEndpointSingularity) {
  // int_0^1 x^(1/4) cos x dx (mpmath, 40 digits).
  const int bits = 192;
  const MpReal ref = MpReal::from_string("0.6539014401232254363051102481918506674558", bits);
  const RealIntegrand f = [](const MpReal& x) { return pow(x, 0.25) * cos(x); };
  const MpReal got = graded_integrate(f, MpReal(0.0, bits), MpReal(1.0, bits), {0.0}, MpReal(1e-32, bits));
  EXPECT_LT(abs(got - ref).to_double(), 1e-32);
  // Default grading cannot reach 1e-40 for this singularity and says so.
  EXPECT_THROW(graded_integrate(f, MpReal(0.0, bits), MpReal(1.0, bits), {0.0}, MpReal(1e-40, bits)), ToleranceNotMet);
}

TEST(Quadrature, CompositeRuleKeepsBreakpointsAndSingularities) {
  CompositeOptions opt;
  opt.base_panels = 4;
  opt.order = 8;
  opt.grading_levels = 3;
  const auto rule = composite_rule(MpReal(-1.0, 128), MpReal(1.0, 128), {0.3}, opt, 128, {0.7});
  const auto& e = rule.panel_edges;
  EXPECT_NE(std::find(e.begin(), e.end(), 0.3), e.end());
  EXPECT_NE(std::find(e.begin(), e.end(), 0.7), e.end());
  // Three graded edges on each side of the singular point.
  const auto left = std::count_if(e.begin(), e.end(), [](double v) { return v > 0.0 && v < 0.3; });
  EXPECT_GE(left, 3);
}

TEST(Quadrature, PanelsRefinementReportsFailure) {
  // A jump inside an ungraded rule cannot meet a tight tolerance.
  const ComplexIntegrand f = [](const MpReal& x) {
    return MpComplex(x > 0.123456 ? MpReal::one(x.precision()) : MpReal::zero(x.precision()));
  };
  EXPECT_THROW(gauss_legendre_panels(f, MpReal(-1.0, 128), MpReal(1.0, 128), 2, 4, MpReal(1e-30, 128), 1),
               ToleranceNotMet);
}
