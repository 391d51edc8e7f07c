#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fextlab/fourext/extension.hpp"
#include "fextlab/mpcore/linalg.hpp"

namespace fextlab::analysis {

/// Real elements of H_N written in the variable u = sin(pi x / 2T) / sin(pi / 2T):
///   r = sum_{j<=n} p_j T_{2j}(u) + sqrt(1 - gamma^2 u^2) sum_{j<n} q_j T_{2j+1}(u),
/// with gamma = sin(pi / 2T). The span equals {1, cos(k pi x / T), sin(k pi x / T)},
/// k <= n, and the basis stays well conditioned on [-1, 1].
class ArcChebyshevSeries {
 public:
  ArcChebyshevSeries() = default;
  ArcChebyshevSeries(double T, std::vector<double> even, std::vector<double> odd);

  double T() const noexcept { return T_; }
  int n() const noexcept { return static_cast<int>(even_.size()) - 1; }
  int N() const noexcept { return 2 * n() + 1; }
  const std::vector<double>& even() const noexcept { return even_; }
  const std::vector<double>& odd() const noexcept { return odd_; }

  double operator()(double x) const;

  /// Coefficients a_0..a_n, b_1..b_n (b[0] = 0) of the trigonometric form
  /// a_0 + sum a_k cos(k pi x / T) + b_k sin(k pi x / T), converted exactly in
  /// multiprecision.
  std::pair<mp::MpVector, mp::MpVector> trig_coefficients(int bits) const;
  /// c_0 = a_0, c_{+-k} = (a_k -+ i b_k) / 2.
  Extension to_extension(int bits) const;

  /// Basis values B_0..B_{N-1} at u.
  static void basis(double u, double gamma, int n, double* out);

 private:
  double T_ = 2.0;
  double gamma_ = 0.0;
  std::vector<double> even_;
  std::vector<double> odd_;
};

struct RemezOptions {
  /// Discrete minimax over these abscissae instead of the continuum [-1, 1].
  std::optional<std::vector<double>> grid;
  /// Dense search grid size; 0 means max(2000, 40 N).
  int search_points = 0;
  double tolerance = 1e-10;
  /// Absolute error below which f counts as an element of H_N.
  double absolute_tolerance = 1e-13;
  int max_iterations = 100;
};

struct MinimaxResult {
  /// max |f - r_N| at the final reference after convergence.
  double E = 0.0;
  /// |levelled error| of the last linear solve.
  double levelled = 0.0;
  ArcChebyshevSeries best;
  std::vector<double> alternation_points;
  std::vector<double> alternation_errors;
  int iterations = 0;
};

/// Remez exchange for min_{r in H_N} max_{x in [-1, 1]} |f(x) - r(x)|, f real.
/// Throws ExchangeStalled after max_iterations and DegenerateReference when
/// fewer than N + 1 alternating extrema remain.
MinimaxResult remez(const std::function<double(double)>& f, int N, double T, const RemezOptions& options = {});

}  // namespace fextlab::analysis
