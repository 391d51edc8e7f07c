#include "fextlab/analysis/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fextlab::analysis {

LinearFit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("linear_fit needs at least two matching points");
  }
  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("linear_fit: abscissae are all equal");
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    rss += r * r;
  }
  fit.residual = std::sqrt(rss / m);
  fit.points = static_cast<int>(xs.size());
  return fit;
}

LinearFit loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < std::min(xs.size(), ys.size()); ++i) {
    if (xs[i] > 0.0 && ys[i] > 0.0) {
      lx.push_back(std::log(xs[i]));
      ly.push_back(std::log(ys[i]));
    }
  }
  return linear_fit(lx, ly);
}

std::vector<double> upper_envelope(const std::vector<double>& errors) {
  std::vector<double> env(errors);
  for (std::size_t i = env.size(); i-- > 1;) {
    env[i - 1] = std::max(env[i - 1], env[i]);
  }
  return env;
}

double band_ratio(const std::vector<double>& values) {
  double lo = INFINITY;
  double hi = 0.0;
  for (double v : values) {
    if (v > 0.0) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!(hi > 0.0)) {
    throw std::invalid_argument("band_ratio: no positive values");
  }
  return hi / lo;
}

}  // namespace fextlab::analysis
