#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fextlab/fourext/function.hpp"

namespace fextlab::harness {

/// Abscissa at which pointwise errors are recorded.
struct EvalPoint {
  double x = 0.0;
  /// interior, interior2, endpoint, singular, ...
  std::string tag;
};

/// Sup of the error over [lo, hi] (native coordinates), sampled on a grid.
struct SupWindow {
  double lo = -1.0;
  double hi = 1.0;
  std::string tag;
};

/// A registry function on its native interval [a, b].
struct TestFunction {
  std::string id;
  Function f;
  double a = -1.0;
  double b = 1.0;
  std::vector<EvalPoint> points;
  std::vector<SupWindow> windows;
  /// Relative rhs quadrature tolerance suited to this function.
  double rhs_tolerance = 1e-30;
  /// Singularity location for analytic functions (pole), if any.
  std::optional<std::complex<double>> pole;
  bool entire = false;
  /// Predicted algebraic slope per point tag, if known.
  std::vector<std::pair<std::string, double>> predicted_slopes;
  /// Point tags whose error is predicted to decay like 1 / log N.
  std::vector<std::string> inverse_log_tags;
};

/// Interior point a + 0.6 (b - a) and right endpoint b.
std::vector<EvalPoint> default_points(double a, double b);

/// Builds a registry function from text such as "exp", "const(2)", "pole(0.6)",
/// "pole(0.2,0.6)", "spline(3)", "power(0.75)", "interior_power(0.25)", "jump",
/// "log_cusp", "abs", "x", "sqrt_cap". Throws UsageError for unknown names or
/// malformed parameters.
TestFunction make_function(const std::string& spec);

/// Names accepted by make_function, for help output.
std::vector<std::string> function_names();

/// Interior singular abscissa of interior_power and log_cusp.
inline constexpr double kInteriorSingularity = 0.29384;

}  // namespace fextlab::harness
