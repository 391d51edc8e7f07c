#pragma once

#include <vector>

namespace fextlab::analysis {

/// Ordinary least-squares line y = intercept + slope * x.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Root-mean-square residual.
  double residual = 0.0;
  int points = 0;
};

LinearFit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys);

/// Slope of log(y) against log(x); nonpositive y are skipped.
LinearFit loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys);

/// e_env[i] = max_{j >= i} e[j]: the smallest nonincreasing majorant of an
/// error sequence ordered by increasing N.
std::vector<double> upper_envelope(const std::vector<double>& errors);

/// max(v) / min(v) over positive entries.
double band_ratio(const std::vector<double>& values);

}  // namespace fextlab::analysis
