#pragma once

#include <vector>

#include "fextlab/analysis/fit.hpp"
#include "fextlab/arcpoly/basis.hpp"
#include "fextlab/arcpoly/kernel.hpp"

namespace fextlab::analysis {

struct LebesgueRecord {
  double x = 0.0;
  int N = 0;
  double value = 0.0;
  int panels = 0;
  /// Relative change between the order-16 and order-24 panel sums.
  double tolerance = 0.0;
};

struct LebesgueOptions {
  /// Sign-change search uses samples_per_degree * N Chebyshev points in y.
  int samples_per_degree = 8;
  int order = 16;
  double tolerance = 1e-8;
  /// Doublings of the sample density before ToleranceNotMet.
  int max_refinements = 2;
};

/// Arc basis up to `max_degree` at max(256, 24 (max_degree + 1)) bits, doubled
/// on NotPositiveDefinite at most three times.
arc::ArcPolyBasis build_arc_basis(double T, int max_degree);

/// Lambda(x; P_N) = int_{-1}^{1} |K_N(x, y)| dy with panels split at x and at
/// every sign change of K_N(x, .).
LebesgueRecord lebesgue_function(double x, const arc::KernelEvaluator& kernel, const LebesgueOptions& options = {});
LebesgueRecord lebesgue_function(double x, int N, const arc::ArcRecurrence& recurrence,
                                 const LebesgueOptions& options = {});

struct LebesgueGrowth {
  /// Lambda against log N (interior) or sqrt N (endpoint).
  LinearFit fit;
  /// max/min of Lambda / log N or Lambda / sqrt N.
  double band_ratio = 0.0;
  bool endpoint = false;
};

LebesgueGrowth lebesgue_growth_fit(const std::vector<int>& Ns, const std::vector<double>& values, bool endpoint);

/// Computes Lambda(x; P_N) for each N, then fits. Endpoint scaling is used when |x| = 1.
LebesgueGrowth lebesgue_growth(double x, const std::vector<int>& Ns, double T,
                               std::vector<LebesgueRecord>* records = nullptr);

}  // namespace fextlab::analysis
