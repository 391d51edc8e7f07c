#include "fextlab/arcpoly/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fextlab/arcpoly/bessel.hpp"
#include "fextlab/errors.hpp"

namespace fextlab::arc {

namespace {

constexpr double kPi = std::numbers::pi;

std::string window_message(const char* regime, double x, double lo, double hi) {
  std::ostringstream os;
  os << regime << " asymptotics valid on [" << lo << ", " << hi << "], got x = " << x;
  return os.str();
}

AsymEval base(double x, int N, double T) {
  if (N < 1) {
    throw std::invalid_argument("asymptotics need N >= 1");
  }
  if (!(T > 1.0)) {
    throw std::invalid_argument("asymptotics need T > 1");
  }
  AsymEval out;
  out.x = x;
  out.N = N;
  out.alpha = arc_alpha(T);
  out.gamma = arc_gamma(T);
  out.eta = eta_of(x, T);
  out.tau = kPi - out.eta;
  return out;
}

// (1/sqrt(2T sin(pi/2T))) exp(i pi N x / 2T)
std::complex<double> prefactor(double x, int N, double T) {
  return std::polar(1.0 / std::sqrt(2.0 * T * arc_gamma(T)), kPi * N * x / (2.0 * T));
}

std::complex<double> bulk_formula(double x, int N, double T, double eta) {
  const double a = kPi / (2.0 * T);
  const double q = std::pow(std::sin((1.0 + x) * a) / std::sin((1.0 - x) * a), 0.25);
  const double phase = kPi / (4.0 * T);
  const double arg = N * eta - kPi / 4.0;
  return prefactor(x, N, T) *
         (std::polar(q, -phase) * std::cos(arg) - std::polar(1.0 / q, phase) * std::sin(arg));
}

// The J0 term carries q sqrt(eta), finite at x = 1: q^4 eta^2 -> sin(2a) 2 cot(a).
std::complex<double> edge_formula(double x, int N, double T, double eta) {
  const double a = kPi / (2.0 * T);
  const double phase = kPi / (4.0 * T);
  const double t = N * eta;
  const double s_minus = std::sin((1.0 - x) * a);
  const double s_plus = std::sin((1.0 + x) * a);
  double q_sqrt_eta;
  double sqrt_eta_over_q;
  if (s_minus <= 0.0 || eta == 0.0) {
    q_sqrt_eta = std::pow(std::sin(2.0 * a) * 2.0 / std::tan(a), 0.25);
    sqrt_eta_over_q = 0.0;
  } else {
    const double q = std::pow(s_plus / s_minus, 0.25);
    q_sqrt_eta = q * std::sqrt(eta);
    sqrt_eta_over_q = std::sqrt(eta) / q;
  }
  const double scale = std::sqrt(kPi / 2.0 * N);
  return prefactor(x, N, T) * scale *
         (std::polar(q_sqrt_eta, -phase) * bessel_j(0, t) - std::polar(sqrt_eta_over_q, phase) * bessel_j(1, t));
}

}  // namespace

double arc_alpha(double T) { return kPi - kPi / T; }
double arc_gamma(double T) { return std::sin(kPi / (2.0 * T)); }

double eta_of(double x, double T) {
  const double a = kPi / (2.0 * T);
  if (x > 0.5 && x <= 1.0) {
    // 1 - cos(eta) = 2 cos((1+x)a/2) sin((1-x)a/2) / sin(a), stable near x = 1.
    const double h = std::cos((1.0 + x) * a / 2.0) * std::sin((1.0 - x) * a / 2.0) / std::sin(a);
    return 2.0 * std::asin(std::sqrt(std::max(h, 0.0)));
  }
  const double c = std::sin(x * a) / std::sin(a);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double tau_of(double theta, double alpha) {
  const double c = std::cos(theta / 2.0) / std::cos(alpha / 2.0);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

AsymEval asym_bulk(double x, int N, double T, double delta) {
  const double lo = -1.0 + delta;
  const double hi = 1.0 - delta;
  if (x < lo || x > hi) {
    throw OutOfRegime(window_message("bulk", x, lo, hi));
  }
  AsymEval out = base(x, N, T);
  out.regime = Regime::bulk;
  if (x < 0.0) {
    out.value = std::conj(bulk_formula(-x, N, T, eta_of(-x, T)));
  } else {
    out.value = bulk_formula(x, N, T, out.eta);
  }
  return out;
}

AsymEval asym_edge(double x, int N, double T, double delta) {
  const double ax = std::abs(x);
  if (ax < 1.0 - delta || ax > 1.0) {
    throw OutOfRegime(window_message("edge", x, 1.0 - delta, 1.0) + " (or its mirror image)");
  }
  AsymEval out = base(x, N, T);
  out.regime = Regime::edge;
  const std::complex<double> v = edge_formula(ax, N, T, eta_of(ax, T));
  out.value = x < 0.0 ? std::conj(v) : v;
  return out;
}

mp::MpComplex conformal_psi(const mp::MpComplex& z, const mp::MpReal& alpha) {
  using mp::MpComplex;
  using mp::MpReal;
  const int bits = std::max(z.precision(), alpha.precision());
  const MpReal gamma = mp::cos(alpha / 2.0);
  const MpReal tol = MpReal::pow2(-bits / 2, bits);

  const MpReal r = abs(z);
  if (abs(r - 1.0) <= tol) {
    // On the unit circle: theta in [0, 2pi) must lie on the arc.
    MpReal theta = mp::atan2(z.im, z.re);
    if (theta.sign() < 0) {
      theta += 2.0 * MpReal::pi(bits);
    }
    const MpReal s = mp::sin((theta + alpha) / 2.0) * mp::sin((theta - alpha) / 2.0);
    if (s < -tol) {
      throw BranchError("point on the unit circle lies in the gap of the arc");
    }
    const MpReal root = mp::sqrt(mp::max(s, MpReal(0L, bits)));
    const MpComplex ratio = MpComplex(mp::cos(theta / 2.0), -root) / gamma;
    const MpReal mag = abs(ratio);
    if (abs(mag - 1.0) > tol) {
      throw BranchError("|psi(z)/sqrt(z)| = " + mag.to_string(10) + " on the arc");
    }
    return MpComplex::unit(theta / 2.0) * ratio;
  }

  const MpComplex e_plus = MpComplex::unit(alpha);
  const MpComplex root = mp::sqrt((z - e_plus) * (z - conj(e_plus)));
  const MpComplex one(MpReal(1L, bits));
  MpComplex psi = (z + one + root) / gamma * 0.5;
  const MpComplex other = (z + one - root) / gamma * 0.5;
  // psi * other = z; the exterior branch is the one of larger modulus.
  if (abs(other) > abs(psi)) {
    psi = other;
  }
  if (abs(psi) < 1.0 - tol.to_double()) {
    throw BranchError("no branch of psi with |psi| >= 1");
  }
  return psi;
}

}  // namespace fextlab::arc
