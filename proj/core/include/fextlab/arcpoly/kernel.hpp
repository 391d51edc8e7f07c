#pragma once

#include "fextlab/arcpoly/basis.hpp"

namespace fextlab::arc {

/// Below this |x - y| the closed form is replaced by the direct sum.
inline constexpr double kKernelSwitch = 0x1p-20;

struct KernelEval {
  mp::MpReal x;
  mp::MpReal y;
  int N = 0;
  mp::MpReal value;
  bool closed_form = false;
};

/// Prolate kernel K_N(x, y) = sum_{k<N} e_k(x) conj(e_k(y)) of H_N, N odd.
/// Uses the Christoffel-Darboux closed form away from the diagonal.
KernelEval cd_kernel(const mp::MpReal& x, const mp::MpReal& y, const ArcPolyBasis& basis, int N);

/// exp(i pi n (y - x) / T) sum_{k<N} conj(Pi_k(zeta)) Pi_k(z), real part.
mp::MpReal kernel_direct_sum(const mp::MpReal& x, const mp::MpReal& y, const ArcPolyBasis& basis, int N);

/// K_N(x, x) = sum_{k<N} |Pi_k(exp(i pi x / T))|^2.
mp::MpReal kernel_diag(const mp::MpReal& x, const ArcPolyBasis& basis, int N);

/// Double-precision kernel built on ArcRecurrence.
class KernelEvaluator {
 public:
  KernelEvaluator(const ArcRecurrence& rec, int N);

  int N() const noexcept { return N_; }
  double T() const noexcept { return rec_->T(); }

  /// A(x) = exp(-i pi N x / 2T) Pi_N(exp(i pi x / T)).
  cd scaled_top(double x) const;
  double operator()(double x, double y) const;
  /// Closed form given precomputed A(x), A(y).
  double from_scaled(double x, cd ax, double y, cd ay) const;
  double direct(double x, double y) const;
  double diag(double x) const;

 private:
  const ArcRecurrence* rec_;
  int N_;
};

}  // namespace fextlab::arc
