#include "fextlab/analysis/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace fextlab::analysis {

namespace {

constexpr double kPi = std::numbers::pi;

// Maximum of g over the grid, refined by golden-section search on the
// neighbouring interval of the best grid point.
double polished_max(const std::function<double(double)>& g, const std::vector<double>& grid) {
  std::size_t best = 0;
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = g(grid[i]);
    if (vals[i] > vals[best]) best = i;
  }
  double lo = grid[best > 0 ? best - 1 : 0];
  double hi = grid[std::min(best + 1, grid.size() - 1)];
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - r * (hi - lo);
  double d = lo + r * (hi - lo);
  double fc = g(c);
  double fd = g(d);
  for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - r * (hi - lo);
      fc = g(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + r * (hi - lo);
      fd = g(d);
    }
  }
  return std::max({vals[best], fc, fd});
}

}  // namespace

double phi_videnskii(double x, double T) {
  const double a = kPi / (2.0 * T);
  const double p = std::sin((1.0 - x) * a) * std::sin((1.0 + x) * a);
  return std::sqrt(std::max(0.0, p)) / std::cos(x * a);
}

double BernsteinRatios::videnskii_bound(double T) { return kPi / T; }
double BernsteinRatios::relaxed_bound(double T) { return kPi / (T * std::sin(kPi / (2.0 * T))); }

BernsteinRatios bernstein_check(const Extension& r, const std::vector<double>& grid) {
  if (r.n() < 1) {
    throw std::invalid_argument("bernstein_check: need n >= 1");
  }
  if (grid.size() < 2) {
    throw std::invalid_argument("bernstein_check: grid needs at least two points");
  }
  std::vector<double> g = grid;
  std::sort(g.begin(), g.end());
  for (double x : g) {
    if (x < -1.0 || x > 1.0) {
      throw std::invalid_argument("bernstein_check: grid must lie in [-1, 1]");
    }
  }
  const double T = r.T();
  const double n = r.n();
  BernsteinRatios out;
  out.sup_norm = polished_max([&](double x) { return std::abs(r.evaluate(x).real()); }, g);
  const double vid = polished_max(
      [&](double x) { return phi_videnskii(x, T) * std::abs(r.derivative(x).real()); }, g);
  const double rel = polished_max(
      [&](double x) { return std::sqrt(std::max(0.0, 1.0 - x * x)) * std::abs(r.derivative(x).real()); }, g);
  out.videnskii = vid / (n * out.sup_norm);
  out.relaxed = rel / (n * out.sup_norm);
  return out;
}

}  // namespace fextlab::analysis
