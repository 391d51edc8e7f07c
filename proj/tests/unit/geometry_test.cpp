#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fextlab/errors.hpp"
#include "fextlab/geometry/mapped_ellipse.hpp"

using namespace fextlab::geometry;

TEST(Map, EndpointsAndCentre) {
  EXPECT_NEAR(map_m(1.0, 2.0), -1.0, 1e-15);
  EXPECT_NEAR(map_m(-1.0, 2.0), -1.0, 1e-15);
  EXPECT_NEAR(map_m(0.0, 2.0), 1.0, 1e-15);
  const cd z(0.3, 0.2);
  const double h = 1e-6;
  const cd fd = (map_m_complex(z + h, 2.0) - map_m_complex(z - h, 2.0)) / (2 * h);
  EXPECT_NEAR(std::abs(fd - map_m_derivative(z, 2.0)), 0.0, 1e-8);
}

TEST(Rates, FigureOneValues) {
  EXPECT_NEAR(predicted_rate({0.0, 0.3}, 2.43), 1.891, 5e-4);
  EXPECT_NEAR(predicted_rate({0.0, 0.6}, 2.43), 3.454, 5e-4);
  EXPECT_NEAR(predicted_rate_entire(2.43), 8.913, 5e-4);
}

TEST(Rates, CapIsMonotoneInT) {
  double previous = 0.0;
  for (double T : {1.1, 1.5, 2.0, 2.43, 4.0}) {
    const double cap = rate_cap(T);
    EXPECT_GT(cap, previous);
    previous = cap;
  }
  EXPECT_DOUBLE_EQ(predicted_rate({0.0, 100.0}, 2.0), rate_cap(2.0));
}

TEST(Rates, BernsteinParameter) {
  EXPECT_DOUBLE_EQ(bernstein_param({0.5, 0.0}), 1.0);
  // The ellipse through 2 has rho = 2 + sqrt(3).
  EXPECT_NEAR(bernstein_param({2.0, 0.0}), 2.0 + std::sqrt(3.0), 1e-14);
}

TEST(Contour, PointsLieOnTheEllipse) {
  const double T = 2.43;
  const double rho = predicted_rate({0.0, 0.6}, T);
  const auto c = mapped_ellipse_contour(rho, T, 64);
  ASSERT_EQ(c.points.size(), 128u);
  double closest = 1.0;
  for (const auto& z : c.points) {
    EXPECT_NEAR(bernstein_param(map_m_complex(z, T)), rho, 1e-8);
    closest = std::min(closest, std::abs(z - cd(0.0, 0.6)));
  }
  // The pole that set rho lies on the contour.
  const auto fine = mapped_ellipse_contour(rho, T, 4096);
  closest = 1.0;
  for (const auto& z : fine.points) closest = std::min(closest, std::abs(z - cd(0.0, 0.6)));
  EXPECT_LT(closest, 1e-6);
}

TEST(Contour, SymmetricAndCollapsing) {
  const auto c = mapped_ellipse_contour(1.01, 2.0, 64);
  double max_im = 0.0;
  for (const auto& z : c.points) {
    max_im = std::max(max_im, std::abs(z.imag()));
    bool has_conjugate = false;
    for (const auto& w : c.points) has_conjugate = has_conjugate || std::abs(w - std::conj(z)) < 1e-9;
    EXPECT_TRUE(has_conjugate);
  }
  EXPECT_LT(max_im, 0.1);
}

TEST(Contour, RejectsRhoOutsideRange) {
  EXPECT_THROW(mapped_ellipse_contour(0.9, 2.0, 16), std::invalid_argument);
  EXPECT_THROW(mapped_ellipse_contour(rate_cap(2.0) * 1.1, 2.0, 16), std::invalid_argument);
}

TEST(RateFit, RecoversGeometricDecay) {
  std::vector<int> ns;
  std::vector<double> errs;
  for (int n = 2; n <= 30; n += 4) {
    ns.push_back(n);
    errs.push_back(std::max(3.0 * std::pow(2.5, -n), 1e-12));
  }
  const auto f = fit_exponential_rate(ns, errs);
  EXPECT_NEAR(f.rho, 2.5, 1e-6);
  EXPECT_LT(f.used, static_cast<int>(ns.size()));
}
