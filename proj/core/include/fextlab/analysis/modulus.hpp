#pragma once

#include <functional>
#include <vector>

namespace fextlab::analysis {

using RealFn = std::function<double(double)>;

struct ModulusOptions {
  /// Grid of 2^level + 1 points; refined one level at a time.
  int min_level = 10;
  int max_level = 22;
  /// Stop once successive levels differ by less than this fraction.
  double relative_change = 0.01;
};

struct ModulusValue {
  double value = 0.0;
  int level = 0;
  bool converged = false;
};

/// Dyadic-grid lower bound of sup |f(x) - f(y)| over x, y in [a, b], |x - y| <= delta.
ModulusValue modulus(const RealFn& f, double delta, double a = -1.0, double b = 1.0,
                     const ModulusOptions& options = {});

/// Dyadic-grid lower bound of sup |f(x + h) - f(x - h)| over x +- h in [-1, 1],
/// 0 <= h <= sqrt(1 - x^2) delta.
ModulusValue weighted_modulus(const RealFn& f, double delta, const ModulusOptions& options = {});

struct ModulusRecord {
  std::vector<double> deltas;
  std::vector<double> values;
  bool weighted = false;
};

ModulusRecord modulus_record(const RealFn& f, const std::vector<double>& deltas, bool weighted);

}  // namespace fextlab::analysis
