#pragma once

#include <complex>
#include <vector>

namespace fextlab::geometry {

using cd = std::complex<double>;

/// m(x) = 2 (cos(pi x / T) - cos(pi / T)) / (1 - cos(pi / T)) - 1.
double map_m(double x, double T);
cd map_m_complex(cd z, double T);
/// dm/dz
cd map_m_derivative(cd z, double T);

/// rho* >= 1 with t on the Bernstein ellipse B(rho*); 1 for t in [-1, 1].
double bernstein_param(cd t);

/// cot^2(pi / 4T), the largest attainable rate.
double rate_cap(double T);

/// min(bernstein_param(m(z0)), cot^2(pi / 4T)).
double predicted_rate(cd singularity, double T);
/// Rate for entire functions: cot^2(pi / 4T).
double predicted_rate_entire(double T);

/// m^{-1}(B(rho)): closed, symmetric about both axes.
struct MappedEllipse {
  double rho = 1.0;
  double T = 2.0;
  /// points[i] for theta_i = 2 pi i / samples (the half with Re z >= 0),
  /// followed by their negatives.
  std::vector<cd> points;
  int samples = 0;
};

/// Preimage of B(rho) under m by arccos inversion with branch tracking and Newton
/// polishing; needs 1 < rho < rate_cap(T). Throws RootNotFound when a point misses |m(z) - t| < 1e-10.
MappedEllipse mapped_ellipse_contour(double rho, double T, int samples);

/// Least-squares rate fit of log(error) against n over the points whose error
/// exceeds 10x the last (plateau) value.
struct RateFit {
  double rho = 0.0;
  double slope = 0.0;
  double residual = 0.0;
  int used = 0;
};
RateFit fit_exponential_rate(const std::vector<int>& ns, const std::vector<double>& errors);

}  // namespace fextlab::geometry
