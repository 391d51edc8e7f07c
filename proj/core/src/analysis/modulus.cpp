#include "fextlab/analysis/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace fextlab::analysis {

namespace {

std::vector<double> sample(const RealFn& f, double a, double b, int level) {
  const std::size_t m = std::size_t{1} << level;
  std::vector<double> v(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    v[i] = f(a + (b - a) * static_cast<double>(i) / static_cast<double>(m));
  }
  return v;
}

// Largest step count j with j h <= span, tolerant to rounding of dyadic spans.
std::size_t steps_within(double span, double h) {
  return static_cast<std::size_t>(std::floor(span / h * (1.0 + 1e-12)));
}

double plain_on_grid(const std::vector<double>& v, std::size_t window) {
  // max over i of max_{i <= j <= i + window} |v_j - v_i| via monotone deques.
  const std::size_t n = v.size();
  window = std::min(window, n - 1);
  std::deque<std::size_t> hi;
  std::deque<std::size_t> lo;
  double best = 0.0;
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (next < n && next <= i + window) {
      while (!hi.empty() && v[hi.back()] <= v[next]) hi.pop_back();
      while (!lo.empty() && v[lo.back()] >= v[next]) lo.pop_back();
      hi.push_back(next);
      lo.push_back(next);
      ++next;
    }
    while (hi.front() < i) hi.pop_front();
    while (lo.front() < i) lo.pop_front();
    best = std::max({best, v[hi.front()] - v[i], v[i] - v[lo.front()]});
  }
  return best;
}

double weighted_on_grid(const std::vector<double>& v, double h, double delta) {
  const std::size_t m = v.size() - 1;
  double best = 0.0;
  for (std::size_t i = 1; i < m; ++i) {
    const double x = -1.0 + h * static_cast<double>(i);
    const double phi = std::sqrt(std::max(0.0, 1.0 - x * x));
    const std::size_t reach = std::min({steps_within(phi * delta, h), i, m - i});
    for (std::size_t j = 1; j <= reach; ++j) {
      best = std::max(best, std::abs(v[i + j] - v[i - j]));
    }
  }
  return best;
}

// First level whose spacing resolves delta by at least four steps.
int resolving_level(double length, double delta) {
  return static_cast<int>(std::ceil(std::log2(length / delta))) + 2;
}

template <typename Eval>
ModulusValue refine(int start, int stop, const ModulusOptions& options, Eval eval) {
  if (options.min_level < 1 || options.max_level < options.min_level) {
    throw std::invalid_argument("modulus: invalid grid levels");
  }
  ModulusValue out;
  double previous = -1.0;
  start = std::max(start, options.min_level);
  stop = std::max(stop, start + 1);
  for (int level = start; level <= stop; ++level) {
    const double value = eval(level);
    out.value = value;
    out.level = level;
    if (previous >= 0.0 && std::abs(value - previous) <= options.relative_change * std::max(value, 1e-300)) {
      out.converged = true;
      return out;
    }
    previous = value;
  }
  return out;
}

}  // namespace

ModulusValue modulus(const RealFn& f, double delta, double a, double b, const ModulusOptions& options) {
  if (!(delta > 0.0) || !(a < b)) {
    throw std::invalid_argument("modulus: need delta > 0 and a < b");
  }
  const int start = resolving_level(b - a, delta);
  return refine(start, std::max(options.max_level, start + 2), options, [&](int level) {
    const double h = (b - a) / static_cast<double>(std::size_t{1} << level);
    return plain_on_grid(sample(f, a, b, level), steps_within(delta, h));
  });
}

ModulusValue weighted_modulus(const RealFn& f, double delta, const ModulusOptions& options) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("weighted_modulus: need delta > 0");
  }
  // Work per level is about 2^(2 level) delta / 2 pair checks; cap it near 2^29.
  const int start = resolving_level(2.0, delta);
  const int affordable = static_cast<int>(std::floor((30.0 - std::log2(delta)) / 2.0));
  return refine(start, std::min(options.max_level, std::max(affordable, start + 2)), options, [&](int level) {
    const double h = 2.0 / static_cast<double>(std::size_t{1} << level);
    return weighted_on_grid(sample(f, -1.0, 1.0, level), h, delta);
  });
}

ModulusRecord modulus_record(const RealFn& f, const std::vector<double>& deltas, bool weighted) {
  ModulusRecord rec;
  rec.weighted = weighted;
  rec.deltas = deltas;
  for (double d : deltas) {
    rec.values.push_back(weighted ? weighted_modulus(f, d).value : modulus(f, d).value);
  }
  return rec;
}

}  // namespace fextlab::analysis
