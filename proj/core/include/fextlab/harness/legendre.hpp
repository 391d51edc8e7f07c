#pragma once

#include "fextlab/fourext/function.hpp"
#include "fextlab/mpcore/linalg.hpp"

namespace fextlab::harness {

/// Legendre series sum_{k<K} a_k p_k(x) on [-1, 1] with p_k normalized so that
/// (1/2) int p_k^2 = 1, i.e. p_k = sqrt(2k + 1) P_k.
class LegendreBaseline {
 public:
  LegendreBaseline() = default;
  explicit LegendreBaseline(mp::MpVector coefficients);

  int size() const noexcept { return static_cast<int>(a_.size()); }
  const mp::MpVector& coefficients() const noexcept { return a_; }

  /// Partial sum of the first `terms` coefficients (all by default).
  mp::MpReal evaluate(const mp::MpReal& x, int terms = -1) const;
  /// Partial sums for terms = 1..size() at x, by one pass of the recurrence.
  std::vector<double> partial_sums(const mp::MpReal& x) const;

 private:
  mp::MpVector a_;
};

/// a_k = (1/2) int_{-1}^{1} f p_k, k < K, by graded composite Gauss-Legendre at
/// `bits` precision with an order-32 vs order-48 agreement check (ToleranceNotMet).
/// f is real and given on [-1, 1].
LegendreBaseline legendre_series(const Function& f, int K, int bits = 128, double tolerance = 1e-25);

}  // namespace fextlab::harness
