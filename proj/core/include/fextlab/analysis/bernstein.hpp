#pragma once

#include <vector>

#include "fextlab/fourext/extension.hpp"

namespace fextlab::analysis {

/// sqrt(sin((1 - x) pi / 2T) sin((1 + x) pi / 2T)) / cos(x pi / 2T).
double phi_videnskii(double x, double T);

struct BernsteinRatios {
  /// max |phi r'| / (n ||r||); bounded by pi / T.
  double videnskii = 0.0;
  /// max |sqrt(1 - x^2) r'| / (n ||r||); bounded by pi / (T sin(pi / 2T)).
  double relaxed = 0.0;
  double sup_norm = 0.0;

  static double videnskii_bound(double T);
  static double relaxed_bound(double T);
};

/// Ratios for a real element r of H_N (n >= 1) over the grid, with the sup norm
/// and both derivative maxima polished by golden-section search around the best
/// grid points. The derivative comes from the coefficients.
BernsteinRatios bernstein_check(const Extension& r, const std::vector<double>& grid);

}  // namespace fextlab::analysis
