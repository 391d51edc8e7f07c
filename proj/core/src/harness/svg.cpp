#include "fextlab/harness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fextlab::harness {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

std::string tick_label(double v, bool log) {
  std::ostringstream os;
  if (log) {
    os << "1e" << static_cast<int>(std::lround(v));
  } else {
    os << std::setprecision(4) << v;
  }
  return os.str();
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label, bool log_x, bool log_y)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)), log_x_(log_x), log_y_(log_y) {}

void SvgPlot::add(Series series) { series_.push_back(std::move(series)); }

const std::vector<std::string>& SvgPlot::palette() {
  static const std::vector<std::string> colors{"#d62728", "#1f77b4", "#2ca02c", "#8c564b", "#ff7f0e",
                                               "#9467bd", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};
  return colors;
}

std::string SvgPlot::render(int width, int height) const {
  const double left = 80, right = 200, top = 40, bottom = 60;
  const double pw = width - left - right;
  const double ph = height - top - bottom;
  auto tx = [&](double x) { return log_x_ ? std::log10(x) : x; };
  auto ty = [&](double y) { return log_y_ ? std::log10(y) : y; };
  auto usable = [&](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!log_x_ || x > 0) && (!log_y_ || y > 0);
  };

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series_) {
    for (std::size_t i = 0; i < std::min(s.xs.size(), s.ys.size()); ++i) {
      if (!usable(s.xs[i], s.ys[i])) continue;
      x0 = std::min(x0, tx(s.xs[i]));
      x1 = std::max(x1, tx(s.xs[i]));
      y0 = std::min(y0, ty(s.ys[i]));
      y1 = std::max(y1, ty(s.ys[i]));
    }
  }
  if (!(x0 <= x1)) {
    x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  }
  if (x1 - x0 < 1e-12) x1 = x0 + 1;
  if (y1 - y0 < 1e-12) y1 = y0 + 1;
  if (log_y_) {
    y0 = std::floor(y0);
    y1 = std::ceil(y1);
  }
  const double xpad = 0.03 * (x1 - x0);
  x0 -= xpad;
  x1 += xpad;
  auto px = [&](double x) { return left + (tx(x) - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return top + (y1 - ty(y)) / (y1 - y0) * ph; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << num(left + pw / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
     << escape(title_) << "</text>\n"
     << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Y ticks: integer decades for log axes, five even steps otherwise.
  std::vector<double> yt;
  if (log_y_) {
    const int span = static_cast<int>(y1 - y0);
    const int step = std::max(1, span / 8);
    for (int e = static_cast<int>(y0); e <= static_cast<int>(y1); e += step) yt.push_back(e);
  } else {
    for (int i = 0; i <= 5; ++i) yt.push_back(y0 + (y1 - y0) * i / 5.0);
  }
  for (double v : yt) {
    const double yy = top + (y1 - v) / (y1 - y0) * ph;
    os << "<line x1=\"" << num(left) << "\" y1=\"" << num(yy) << "\" x2=\"" << num(left + pw) << "\" y2=\"" << num(yy)
       << "\" stroke=\"#dddddd\"/>\n"
       << "<text x=\"" << num(left - 6) << "\" y=\"" << num(yy + 4) << "\" text-anchor=\"end\">"
       << tick_label(v, log_y_) << "</text>\n";
  }
  std::vector<double> xt;
  if (log_x_) {
    for (double m : {1.0, 2.0, 5.0}) {
      for (int e = static_cast<int>(std::floor(x0)); e <= static_cast<int>(std::ceil(x1)); ++e) {
        const double v = std::log10(m) + e;
        if (v >= x0 && v <= x1) xt.push_back(v);
      }
    }
  } else {
    for (int i = 0; i <= 5; ++i) xt.push_back(x0 + (x1 - x0) * i / 5.0);
  }
  for (double v : xt) {
    const double xx = left + (v - x0) / (x1 - x0) * pw;
    std::ostringstream lab;
    lab << std::setprecision(4) << (log_x_ ? std::pow(10.0, v) : v);
    os << "<line x1=\"" << num(xx) << "\" y1=\"" << num(top) << "\" x2=\"" << num(xx) << "\" y2=\""
       << num(top + ph) << "\" stroke=\"#eeeeee\"/>\n"
       << "<text x=\"" << num(xx) << "\" y=\"" << num(top + ph + 16) << "\" text-anchor=\"middle\">" << lab.str()
       << "</text>\n";
  }
  os << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(height - 14) << "\" text-anchor=\"middle\">"
     << escape(x_label_) << "</text>\n"
     << "<text transform=\"translate(18," << num(top + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
     << escape(y_label_) << "</text>\n";

  int legend_row = 0;
  for (const auto& s : series_) {
    std::ostringstream pts;
    for (std::size_t i = 0; i < std::min(s.xs.size(), s.ys.size()); ++i) {
      if (!usable(s.xs[i], s.ys[i])) continue;
      pts << num(px(s.xs[i])) << ',' << num(py(s.ys[i])) << ' ';
    }
    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
    if (!s.dash.empty()) os << " stroke-dasharray=\"" << s.dash << "\"";
    os << " points=\"" << pts.str() << "\"/>\n";
    if (s.markers) {
      for (std::size_t i = 0; i < std::min(s.xs.size(), s.ys.size()); ++i) {
        if (!usable(s.xs[i], s.ys[i])) continue;
        os << "<circle cx=\"" << num(px(s.xs[i])) << "\" cy=\"" << num(py(s.ys[i])) << "\" r=\"2.5\" fill=\""
           << s.color << "\"/>\n";
      }
    }
    if (!s.label.empty()) {
      const double ly = top + 10 + 16 * legend_row++;
      os << "<line x1=\"" << num(left + pw + 10) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(left + pw + 34)
         << "\" y2=\"" << num(ly) << "\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
      if (!s.dash.empty()) os << " stroke-dasharray=\"" << s.dash << "\"";
      os << "/>\n<text x=\"" << num(left + pw + 40) << "\" y=\"" << num(ly + 4) << "\">" << escape(s.label)
         << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

void SvgPlot::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << render();
  if (!out) {
    throw std::runtime_error("failed writing " + path);
  }
}

}  // namespace fextlab::harness
