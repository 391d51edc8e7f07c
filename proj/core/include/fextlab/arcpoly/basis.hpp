#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "fextlab/mpcore/linalg.hpp"

namespace fextlab::arc {

using cd = std::complex<double>;

/// mu_j = (1/2pi) int exp(-i j theta) 2T chi_{[-pi/T, pi/T]}(theta) dtheta = 2 sinc(j pi / T).
mp::MpReal moments(double T, int j, int bits);

/// Polynomial sum_j coeffs[j] z^j with complex coefficients.
struct Polynomial {
  mp::CVector coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  mp::MpComplex operator()(const mp::MpComplex& z) const;
};

/// p*(z) = z^n conj(p(1/conj(z))): coefficients reversed and conjugated.
Polynomial reflected(const Polynomial& p);

/// Orthonormal polynomials Pi_0..Pi_M on the unit circle for the weight
/// 2T on the arc |theta| <= pi/T.
class ArcPolyBasis {
 public:
  ArcPolyBasis() = default;
  /// Cholesky of the moment matrix [mu_{j-k}]; throws NotPositiveDefinite.
  static ArcPolyBasis build(double T, int max_degree, int bits);

  double T() const noexcept { return T_; }
  int max_degree() const noexcept { return M_; }
  int precision() const noexcept { return coeffs_.precision(); }

  /// Row k holds the monomial coefficients of Pi_k.
  const mp::MpMatrix& coefficients() const noexcept { return coeffs_; }
  /// Leading coefficient chi_k > 0.
  const mp::MpReal& leading(int k) const;
  /// alpha_k with Pi_{k+1} = (z Pi_k - alpha_k Pi*_k) / sqrt(1 - alpha_k^2).
  const mp::MpVector& verblunsky() const noexcept { return alpha_; }

  Polynomial polynomial(int k) const;
  /// Horner evaluation of Pi_k from its coefficients.
  mp::MpComplex evaluate(int k, const mp::MpComplex& z) const;
  /// Pi*_k(z) from the reversed coefficients.
  mp::MpComplex evaluate_reflected(int k, const mp::MpComplex& z) const;
  /// Pi_0(z)..Pi_N(z) by the Szego recurrence.
  mp::CVector evaluate_all(const mp::MpComplex& z, int N) const;

  /// Pi_k at z = exp(i pi x / T).
  mp::MpComplex on_arc(int k, const mp::MpReal& x) const;

 private:
  double T_ = 1.0;
  int M_ = 0;
  mp::MpMatrix coeffs_;
  mp::MpVector alpha_;
};

/// Double-precision Szego recurrence driven by the Verblunsky coefficients of a
/// multiprecision basis. Fast path for kernel sweeps.
class ArcRecurrence {
 public:
  ArcRecurrence() = default;
  explicit ArcRecurrence(const ArcPolyBasis& basis);

  double T() const noexcept { return T_; }
  int max_degree() const noexcept { return static_cast<int>(alpha_.size()); }

  /// (Pi_N(z), Pi*_N(z)).
  std::pair<cd, cd> evaluate(cd z, int N) const;
  /// Pi_0(z)..Pi_N(z).
  std::vector<cd> evaluate_all(cd z, int N) const;
  cd on_arc(int N, double x) const;

 private:
  double T_ = 1.0;
  std::vector<double> alpha_;
  std::vector<double> rho_;
};

}  // namespace fextlab::arc
