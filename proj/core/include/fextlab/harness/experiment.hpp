#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fextlab::harness {

struct ExperimentSpec {
  std::string name;
  /// Registry specs understood by make_function.
  std::vector<std::string> functions;
  double T = 2.0;
  /// Odd and increasing.
  std::vector<int> Ns;
  /// Also run the Legendre series of the same lengths.
  bool baseline = false;
  /// Semi-log plot and exponential rate fits instead of log-log slopes.
  bool exponential = false;
  /// 0 selects max(256, 24 N) for the largest N.
  int precision_bits = 0;
  /// Multiprecision bits of the Legendre baseline.
  int baseline_bits = 128;

  /// Throws UsageError when the N list or T is invalid.
  void validate() const;
};

/// The four built-in experiments: exp_analytic, exp_spline, exp_holder, exp_interior.
ExperimentSpec experiment_spec(const std::string& name);
std::vector<std::string> experiment_names();

struct ExperimentRow {
  std::string function;
  double T = 0.0;
  int N = 0;
  double x = 0.0;
  std::string x_tag;
  double abs_error = 0.0;
  double runtime_ms = 0.0;
};

struct SeriesFit {
  std::string function;
  std::string x_tag;
  /// fe or legendre.
  std::string method;
  /// log-log slope (algebraic) or -log(rho) per n (exponential).
  double slope = 0.0;
  double residual = 0.0;
  /// Algebraic fits only: slope of the nonincreasing upper envelope of the
  /// errors, which is insensitive to dips where the error changes sign.
  double envelope_slope = 0.0;
  /// Exponential fits only.
  double rho = 0.0;
  std::optional<double> predicted;
  /// The predicted decay is 1 / log N rather than a power of N.
  bool inverse_log = false;
};

struct ExperimentRecord {
  ExperimentSpec spec;
  std::vector<ExperimentRow> rows;
  std::vector<SeriesFit> fits;

  /// Rows of one series in N order.
  std::vector<ExperimentRow> series(const std::string& function, const std::string& x_tag) const;
  const SeriesFit* fit(const std::string& function, const std::string& x_tag, const std::string& method = "fe") const;
};

/// Name used for Legendre rows in the function column.
std::string legendre_label(const std::string& function);

using Progress = std::function<void(const std::string& message)>;

/// Runs every (function, N) pair; functions are processed on worker threads.
/// Any module error aborts with the failing function and N in the message.
ExperimentRecord run_experiment(const ExperimentSpec& spec, const Progress& progress = {});

inline constexpr const char* kCsvHeader = "function,T,N,x,x_tag,abs_error,runtime_ms";

void write_csv(const ExperimentRecord& record, std::ostream& out);
/// Writes <dir>/<name>.csv and/or <dir>/<name>.svg; creates dir. Returns paths written.
std::vector<std::string> write_outputs(const ExperimentRecord& record, const std::string& dir, bool csv, bool svg);

std::string render_svg(const ExperimentRecord& record);

}  // namespace fextlab::harness
