#pragma once

#include <string>
#include <vector>

namespace fextlab::harness {

/// Minimal static SVG 1.1 line plot with optional log axes.
class SvgPlot {
 public:
  struct Series {
    std::string label;
    std::vector<double> xs;
    std::vector<double> ys;
    std::string color = "#1f77b4";
    /// "", "4 3" (dashed), "1 3" (dotted) ...
    std::string dash;
    bool markers = true;
  };

  SvgPlot(std::string title, std::string x_label, std::string y_label, bool log_x, bool log_y);

  void add(Series series);
  std::string render(int width = 720, int height = 480) const;
  /// Writes render() to path; throws std::runtime_error on I/O failure.
  void write(const std::string& path) const;

  static const std::vector<std::string>& palette();

 private:
  std::string title_;
  std::string x_label_;
  std::string y_label_;
  bool log_x_;
  bool log_y_;
  std::vector<Series> series_;
};

}  // namespace fextlab::harness
