#pragma once

#include <functional>
#include <vector>

namespace fextlab::analysis {

/// A 2T-periodic function equal to f on [-1, 1] and C^k across x = +-1.
///
/// On [1, 2T - 1] it is the degree 2k + 1 Hermite interpolant of the
/// derivatives f^(j)(1) and f^(j)(-1), j <= k (linear for k = 0).
class PeriodicExtension {
 public:
  PeriodicExtension(std::function<double(double)> f, int k, double T, std::vector<double> right_derivatives,
                    std::vector<double> left_derivatives);

  double operator()(double x) const;
  int smoothness() const noexcept { return k_; }
  double T() const noexcept { return T_; }

 private:
  double blend(double s) const;

  std::function<double(double)> f_;
  int k_;
  double T_;
  // Newton form over the confluent nodes 1 (k+1 times), 2T-1 (k+1 times).
  std::vector<double> nodes_;
  std::vector<double> newton_;
};

/// Derivatives at +-1 are taken from `derivatives[j-1]` when supplied, otherwise
/// from one-sided finite differences inside [-1, 1].
PeriodicExtension periodic_extension(std::function<double(double)> f, int k, double T,
                                     const std::vector<std::function<double(double)>>& derivatives = {});

}  // namespace fextlab::analysis
