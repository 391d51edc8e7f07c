#include "fextlab/analysis/periodic.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fextlab::analysis {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) {
    r *= i;
  }
  return r;
}

double binomial(int n, int r) { return factorial(n) / (factorial(r) * factorial(n - r)); }

// j-th derivative by a one-sided forward (dir = +1) or backward (dir = -1)
// difference of order 2 accuracy in the step.
double one_sided_derivative(const std::function<double(double)>& f, double x, int j, int dir) {
  if (j == 0) {
    return f(x);
  }
  const double h = std::pow(1e-16, 1.0 / (j + 2));
  // Richardson combination of steps h and h/2 on the forward difference.
  auto diff = [&](double step) {
    double s = 0.0;
    for (int i = 0; i <= j; ++i) {
      const double sign = ((j - i) % 2 == 0) ? 1.0 : -1.0;
      s += sign * binomial(j, i) * f(x + dir * i * step);
    }
    return s / std::pow(dir * step, j);
  };
  return 2.0 * diff(h / 2.0) - diff(h);
}

}  // namespace

PeriodicExtension::PeriodicExtension(std::function<double(double)> f, int k, double T,
                                     std::vector<double> right_derivatives, std::vector<double> left_derivatives)
    : f_(std::move(f)), k_(k), T_(T) {
  if (k < 0 || !(T > 1.0)) {
    throw std::invalid_argument("periodic_extension: need k >= 0 and T > 1");
  }
  if (static_cast<int>(right_derivatives.size()) != k + 1 || static_cast<int>(left_derivatives.size()) != k + 1) {
    throw std::invalid_argument("periodic_extension: need k + 1 derivative values at each end");
  }
  const double s0 = 1.0;
  const double s1 = 2.0 * T - 1.0;
  const int m = 2 * (k + 1);
  for (int i = 0; i < k + 1; ++i) nodes_.push_back(s0);
  for (int i = 0; i < k + 1; ++i) nodes_.push_back(s1);

  // Confluent divided differences.
  std::vector<std::vector<double>> table(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) {
    table[static_cast<std::size_t>(i)][0] = i <= k ? right_derivatives[0] : left_derivatives[0];
  }
  for (int order = 1; order < m; ++order) {
    for (int i = 0; i + order < m; ++i) {
      const double a = nodes_[static_cast<std::size_t>(i)];
      const double b = nodes_[static_cast<std::size_t>(i + order)];
      double v;
      if (a == b) {
        const auto& d = a == s0 ? right_derivatives : left_derivatives;
        v = d[static_cast<std::size_t>(order)] / factorial(order);
      } else {
        v = (table[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(order - 1)] -
             table[static_cast<std::size_t>(i)][static_cast<std::size_t>(order - 1)]) /
            (b - a);
      }
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(order)] = v;
    }
  }
  for (int order = 0; order < m; ++order) {
    newton_.push_back(table[0][static_cast<std::size_t>(order)]);
  }
}

double PeriodicExtension::blend(double s) const {
  double acc = newton_.back();
  for (std::size_t i = newton_.size() - 1; i-- > 0;) {
    acc = acc * (s - nodes_[i]) + newton_[i];
  }
  return acc;
}

double PeriodicExtension::operator()(double x) const {
  const double period = 2.0 * T_;
  // Reduce to [-1, 2T - 1).
  double s = std::fmod(x + 1.0, period);
  if (s < 0.0) {
    s += period;
  }
  s -= 1.0;
  return s <= 1.0 ? f_(s) : blend(s);
}

PeriodicExtension periodic_extension(std::function<double(double)> f, int k, double T,
                                     const std::vector<std::function<double(double)>>& derivatives) {
  std::vector<double> right;
  std::vector<double> left;
  for (int j = 0; j <= k; ++j) {
    if (j == 0) {
      right.push_back(f(1.0));
      left.push_back(f(-1.0));
    } else if (static_cast<int>(derivatives.size()) >= j) {
      right.push_back(derivatives[static_cast<std::size_t>(j - 1)](1.0));
      left.push_back(derivatives[static_cast<std::size_t>(j - 1)](-1.0));
    } else {
      right.push_back(one_sided_derivative(f, 1.0, j, -1));
      left.push_back(one_sided_derivative(f, -1.0, j, +1));
    }
  }
  return PeriodicExtension(std::move(f), k, T, std::move(right), std::move(left));
}

}  // namespace fextlab::analysis
