#include "fextlab/harness/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fextlab/errors.hpp"

namespace fextlab::harness {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& text, Parse parse) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) {
      throw UsageError("empty entry in list '" + text + "'");
    }
    std::size_t used = 0;
    T v;
    try {
      v = parse(item, &used);
    } catch (const std::logic_error&) {
      throw UsageError("bad number '" + item + "'");
    }
    if (used != item.size()) {
      throw UsageError("bad number '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    throw UsageError("empty list");
  }
  return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  return parse_list<int>(text, [](const std::string& s, std::size_t* used) { return std::stoi(s, used); });
}

std::vector<double> parse_double_list(const std::string& text) {
  return parse_list<double>(text, [](const std::string& s, std::size_t* used) { return std::stod(s, used); });
}

bool parse_bool(const std::string& text) {
  std::string t = trim(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "1" || t == "true" || t == "yes" || t == "on") return true;
  if (t == "0" || t == "false" || t == "no" || t == "off") return false;
  throw UsageError("bad boolean '" + text + "'");
}

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string line;
  int number = 0;
  while (std::getline(ss, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(number) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw UsageError("config line " + std::to_string(number) + ": empty key");
    }
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot read config file " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void apply_settings(Settings& settings, const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    if (key == "T") {
      settings.T = parse_double_list(value).at(0);
    } else if (key == "N") {
      settings.Ns = parse_int_list(value);
    } else if (key == "precision_bits") {
      settings.precision_bits = parse_int_list(value).at(0);
      if (settings.precision_bits < 64) throw UsageError("precision_bits must be at least 64");
    } else if (key == "epsilon") {
      settings.epsilon = parse_double_list(value).at(0);
    } else if (key == "out") {
      settings.out = value;
    } else if (key == "csv") {
      settings.csv = parse_bool(value);
    } else if (key == "svg") {
      settings.svg = parse_bool(value);
    } else if (key == "function") {
      settings.function = value;
    } else if (key == "x") {
      settings.xs = parse_double_list(value);
    } else {
      throw UsageError("unknown setting '" + key + "'");
    }
  }
}

void apply_environment(Settings& settings) {
  if (const char* v = std::getenv(kPrecisionEnv); v != nullptr && *v != '\0') {
    apply_settings(settings, {{"precision_bits", v}});
  }
}

}  // namespace fextlab::harness
