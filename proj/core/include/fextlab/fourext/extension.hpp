#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "fextlab/fourext/function.hpp"
#include "fextlab/mpcore/linalg.hpp"
#include "fextlab/mpcore/quadrature.hpp"

namespace fextlab {

/// One Fourier extension instance: approximate f on [a, b] (mapped to [-1, 1])
/// from H_N = span{exp(i pi k x / T)}, k = -n..n.
struct FEProblem {
  double T = 2.0;
  int n = 0;
  int precision_bits = 256;
  double a = -1.0;
  double b = 1.0;

  int N() const noexcept { return 2 * n + 1; }
  /// Throws std::invalid_argument on T <= 1, n < 0, a >= b or precision < 64.
  void validate() const;

  /// max(256, 24 N) bits.
  static int default_precision(int N);
  static FEProblem with_N(double T, int N, int precision_bits = 0);
};

/// Truncated Fourier series sum_k c_k exp(i pi k x / T), k = -n..n.
class Extension {
 public:
  Extension() = default;
  Extension(double T, mp::CVector coefficients);

  double T() const noexcept { return T_; }
  int n() const noexcept { return static_cast<int>(coeffs_.size() / 2); }
  int N() const noexcept { return static_cast<int>(coeffs_.size()); }
  int precision() const noexcept;

  /// c_k for k in [-n, n].
  const mp::MpComplex& coefficient(int k) const { return coeffs_.at(static_cast<std::size_t>(k + n())); }
  const mp::CVector& coefficients() const noexcept { return coeffs_; }

  mp::MpComplex evaluate(const mp::MpReal& x) const;
  std::complex<double> evaluate(double x) const;
  /// Exact derivative: sum_k (i pi k / T) c_k exp(i pi k x / T).
  mp::MpComplex derivative(const mp::MpReal& x) const;
  std::complex<double> derivative(double x) const;

  /// Copy with coefficients rounded to `bits` (cheaper evaluation).
  Extension rounded(int bits) const;
  /// Enough bits to absorb cancellation among the coefficients with ~190 bits to
  /// spare, capped at the coefficient precision.
  int evaluation_bits() const;

  /// Regularization metadata; empty epsilon for exact solves.
  std::optional<double> epsilon;
  std::size_t retained_count = 0;
  int solve_precision = 0;

 private:
  double T_ = 2.0;
  mp::CVector coeffs_;
  std::vector<std::complex<double>> coeffs_d_;
};

Extension operator+(const Extension& a, const Extension& b);

/// G_{kj} = sinc((k - j) pi / T), k, j = 0..N-1.
mp::HermitianToeplitz build_gram(double T, int N, int bits);

struct RhsOptions {
  /// Allowed change of any b_k under quadrature order refinement, relative to max |b_k|.
  double tolerance = 1e-30;
  mp::CompositeOptions quadrature;
};

/// b_k = sqrt(T/2) int_{-1}^{1} exp(-i pi k x / T) f(x) dx for k = -n..n, with f
/// given on [-1, 1]. All k share one quadrature rule.
mp::CVector build_rhs(const Function& f, const FEProblem& problem, const RhsOptions& options = {});

struct ProlateSystem {
  FEProblem problem;
  mp::HermitianToeplitz G;
  mp::CVector b;

  /// Leading subproblem of size 2m+1 with entries rounded to `bits`.
  ProlateSystem sliced(int m, int bits) const;
};

ProlateSystem assemble(const Function& f, const FEProblem& problem, const RhsOptions& options = {});

/// Cholesky solve of G c = b / sqrt(2T). Throws NotPositiveDefinite or
/// ResidualTooLarge when the working precision is insufficient.
Extension solve_exact(const ProlateSystem& system);

/// c = V S_eps^+ V^T b / sqrt(2T), dropping eigenvalues below eps.
Extension solve_regularized(const ProlateSystem& system, const mp::EigenDecomposition& eig, double eps);
Extension solve_regularized(const ProlateSystem& system, double eps);

struct FitOptions {
  RhsOptions rhs;
  int max_escalations = 3;
};

/// assemble + solve_exact with precision doubling on failure.
Extension fit(const Function& f, FEProblem problem, const FitOptions& options = {});

/// Exact solve for a leading subproblem with the same escalation policy, reusing
/// the rhs of `full` while it carries enough precision.
Extension fit_sliced(const ProlateSystem& full, int m, const Function& f, const FitOptions& options = {});

struct ErrorNorms {
  double sup = 0.0;
  double l2 = 0.0;
};

struct NormOptions {
  /// Precision for the L2 quadrature; 0 means Extension::evaluation_bits().
  int bits = 0;
  mp::CompositeOptions quadrature{16, 16, 0.25, 40};
};

/// Sup over the grid and L2(-1, 1) norm by graded quadrature of |f - f_N|^2;
/// f is given on [-1, 1].
ErrorNorms error_norms(const Function& f, const Extension& ext, const std::vector<double>& grid,
                       const NormOptions& options = {});

/// Same, over the grid only, in multiprecision.
double sup_error(const Function& f, const Extension& ext, const std::vector<double>& grid);

}  // namespace fextlab
