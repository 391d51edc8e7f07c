#include "fextlab/analysis/lebesgue.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fextlab/errors.hpp"
#include "fextlab/fourext/extension.hpp"
#include "fextlab/mpcore/quadrature.hpp"

namespace fextlab::analysis {

arc::ArcPolyBasis build_arc_basis(double T, int max_degree) {
  int bits = FEProblem::default_precision(max_degree + 1);
  for (int attempt = 0;; ++attempt) {
    try {
      return arc::ArcPolyBasis::build(T, max_degree, bits);
    } catch (const NotPositiveDefinite&) {
      if (attempt >= 3) {
        throw;
      }
      bits *= 2;
    }
  }
}

namespace {

double panel_sum(const std::vector<double>& edges, const mp::GaussRuleD& rule,
                 const std::function<double(double)>& g) {
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    const double mid = 0.5 * (edges[p + 1] + edges[p]);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      s += rule.weights[i] * g(mid + half * rule.nodes[i]);
    }
    total += half * s;
  }
  return total;
}

}  // namespace

LebesgueRecord lebesgue_function(double x, const arc::KernelEvaluator& kernel, const LebesgueOptions& options) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw std::invalid_argument("lebesgue_function: x must lie in [-1, 1]");
  }
  const int N = kernel.N();
  const arc::cd ax = kernel.scaled_top(x);
  const auto k = [&](double y) { return kernel.from_scaled(x, ax, y, kernel.scaled_top(y)); };
  const auto abs_k = [&](double y) { return std::abs(k(y)); };

  const mp::GaussRuleD& coarse = mp::gauss_legendre_double(options.order);
  const mp::GaussRuleD& fine = mp::gauss_legendre_double(options.order + options.order / 2);

  int samples = std::max(64, options.samples_per_degree * N);
  double change = 0.0;
  for (int refinement = 0; refinement <= options.max_refinements; ++refinement, samples *= 2) {
    std::vector<double> ys;
    ys.reserve(static_cast<std::size_t>(samples + 2));
    for (int i = 0; i <= samples; ++i) {
      ys.push_back(-std::cos(std::numbers::pi * i / samples));
    }
    ys.push_back(x);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    std::vector<double> edges{-1.0, 1.0, x};
    double prev = k(ys.front());
    for (std::size_t i = 1; i < ys.size(); ++i) {
      const double cur = k(ys[i]);
      if ((prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0)) {
        double lo = ys[i - 1];
        double hi = ys[i];
        double flo = prev;
        for (int it = 0; it < 60 && hi - lo > 1e-15; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = k(mid);
          if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        edges.push_back(0.5 * (lo + hi));
      }
      prev = cur;
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    // At least 4N panels: halve the widest ones.
    while (static_cast<int>(edges.size()) - 1 < 4 * N) {
      std::size_t widest = 0;
      for (std::size_t p = 1; p + 1 < edges.size(); ++p) {
        if (edges[p + 1] - edges[p] > edges[widest + 1] - edges[widest]) {
          widest = p;
        }
      }
      edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(widest + 1),
                   0.5 * (edges[widest] + edges[widest + 1]));
    }

    const double s_coarse = panel_sum(edges, coarse, abs_k);
    const double s_fine = panel_sum(edges, fine, abs_k);
    change = std::abs(s_fine - s_coarse) / std::max(s_fine, 1e-300);
    if (change <= options.tolerance) {
      LebesgueRecord rec;
      rec.x = x;
      rec.N = N;
      rec.value = s_fine;
      rec.panels = static_cast<int>(edges.size()) - 1;
      rec.tolerance = change;
      return rec;
    }
  }
  throw ToleranceNotMet("Lebesgue quadrature at x = " + std::to_string(x) + ", N = " + std::to_string(N) +
                        " changed by " + std::to_string(change) + " relative");
}

LebesgueRecord lebesgue_function(double x, int N, const arc::ArcRecurrence& recurrence,
                                 const LebesgueOptions& options) {
  return lebesgue_function(x, arc::KernelEvaluator(recurrence, N), options);
}

LebesgueGrowth lebesgue_growth_fit(const std::vector<int>& Ns, const std::vector<double>& values, bool endpoint) {
  if (Ns.size() != values.size() || Ns.size() < 4) {
    throw std::invalid_argument("lebesgue_growth_fit needs at least four N values");
  }
  std::vector<double> scale;
  std::vector<double> ratio;
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    const double s = endpoint ? std::sqrt(static_cast<double>(Ns[i])) : std::log(static_cast<double>(Ns[i]));
    scale.push_back(s);
    ratio.push_back(values[i] / s);
  }
  LebesgueGrowth out;
  out.fit = linear_fit(scale, values);
  out.band_ratio = band_ratio(ratio);
  out.endpoint = endpoint;
  return out;
}

LebesgueGrowth lebesgue_growth(double x, const std::vector<int>& Ns, double T, std::vector<LebesgueRecord>* records) {
  if (Ns.empty()) {
    throw std::invalid_argument("lebesgue_growth: empty N list");
  }
  const int top = *std::max_element(Ns.begin(), Ns.end());
  const arc::ArcRecurrence rec(build_arc_basis(T, top));
  std::vector<double> values;
  for (int N : Ns) {
    const LebesgueRecord r = lebesgue_function(x, N, rec);
    values.push_back(r.value);
    if (records != nullptr) {
      records->push_back(r);
    }
  }
  return lebesgue_growth_fit(Ns, values, std::abs(x) == 1.0);
}

}  // namespace fextlab::analysis
