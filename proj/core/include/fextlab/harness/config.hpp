#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fextlab::harness {

/// Run settings shared by the CLI subcommands.
///
/// Sources apply in increasing priority: defaults, config file, the
/// FEXTLAB_PRECISION_BITS environment variable, command-line flags.
struct Settings {
  double T = 2.0;
  std::vector<int> Ns{17, 33, 65, 129};
  /// 0 means the max(256, 24 N) policy.
  int precision_bits = 0;
  std::optional<double> epsilon;
  std::string out = "runs";
  bool csv = true;
  bool svg = true;
  std::string function = "exp";
  std::vector<double> xs{0.0, 1.0};
};

/// Parses flat key=value text; '#' starts a comment. Throws UsageError on
/// malformed lines.
std::map<std::string, std::string> parse_config(const std::string& text);
/// Reads and parses a file; throws UsageError when it cannot be read.
std::map<std::string, std::string> load_config_file(const std::string& path);

/// Applies recognised keys (T, N, precision_bits, epsilon, out, csv, svg,
/// function, x); unknown keys or bad values throw UsageError.
void apply_settings(Settings& settings, const std::map<std::string, std::string>& values);

/// Applies FEXTLAB_PRECISION_BITS when set.
void apply_environment(Settings& settings);

std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);
bool parse_bool(const std::string& text);

inline constexpr const char* kDefaultConfigFile = "fextlab.cfg";
inline constexpr const char* kPrecisionEnv = "FEXTLAB_PRECISION_BITS";

}  // namespace fextlab::harness
