#pragma once

#include <complex>

#include "fextlab/mpcore/mpcomplex.hpp"

namespace fextlab::arc {

/// Default width of the endpoint regime.
inline constexpr double kRegimeDelta = 0.2;

enum class Regime { bulk, edge };

/// Large-N approximation of Pi_N(exp(i pi x / T)).
struct AsymEval {
  double x = 0.0;
  int N = 0;
  Regime regime = Regime::bulk;
  std::complex<double> value;
  double eta = 0.0;    ///< arccos(sin(x pi / 2T) / sin(pi / 2T)), in [0, pi]
  double tau = 0.0;    ///< tau(theta) at theta = pi x / T + pi, equals pi - eta
  double gamma = 0.0;  ///< cos(alpha / 2) = sin(pi / 2T)
  double alpha = 0.0;  ///< pi - pi / T
};

double arc_alpha(double T);
double arc_gamma(double T);
/// eta(x) for x in [-1, 1].
double eta_of(double x, double T);
/// tau(theta) = arccos(cos(theta / 2) / gamma) for theta in [alpha, 2 pi - alpha].
double tau_of(double theta, double alpha);

/// Cosine/sine form, valid on [-1 + delta, 1 - delta]. Throws OutOfRegime.
AsymEval asym_bulk(double x, int N, double T, double delta = kRegimeDelta);
/// J0/J1 form, valid on [1 - delta, 1] and (by conjugation) [-1, -1 + delta].
AsymEval asym_edge(double x, int N, double T, double delta = kRegimeDelta);

/// psi(z) = (z + 1 + sqrt((z - e^{i alpha})(z - e^{-i alpha}))) / (2 gamma), mapping
/// the exterior of the arc {e^{i theta}: alpha <= theta <= 2pi - alpha} onto |w| > 1.
/// On the arc the limiting value with |psi(z) / sqrt(z)| = 1 is returned, using
/// sqrt(e^{i theta}) = e^{i theta / 2}. Throws BranchError if |psi| < 1.
mp::MpComplex conformal_psi(const mp::MpComplex& z, const mp::MpReal& alpha);

}  // namespace fextlab::arc
