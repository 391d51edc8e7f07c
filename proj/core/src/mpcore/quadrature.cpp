#include "fextlab/mpcore/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "fextlab/errors.hpp"

namespace fextlab::mp {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<MpReal, MpReal> legendre_with_derivative(int n, const MpReal& x) {
  const int bits = x.precision();
  MpReal p0(1L, bits);
  MpReal p1 = x;
  for (int k = 2; k <= n; ++k) {
    MpReal p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  // (1 - x^2) P_n' = n (P_{n-1} - x P_n)
  MpReal dp = static_cast<double>(n) * (p0 - x * p1) / (1.0 - x * x);
  return {std::move(p1), std::move(dp)};
}

GaussRule compute_rule(int n, int bits) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  const MpReal tol = MpReal::pow2(-static_cast<long>(bits) + 4, bits);
  for (int i = 0; i < half; ++i) {
    MpReal x(std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5)), bits);
    MpReal dp(0L, bits);
    for (int it = 0; it < 200; ++it) {
      auto [p, d] = legendre_with_derivative(n, x);
      const MpReal step = p / d;
      x -= step;
      dp = std::move(d);
      if (abs(step) <= tol) {
        dp = legendre_with_derivative(n, x).second;
        break;
      }
    }
    const MpReal w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[static_cast<std::size_t>(n / 2)] = MpReal(0L, bits);
  }
  return rule;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

MpComplex to_complex(const MpReal& x) { return MpComplex(x); }

}  // namespace

const GaussRule& gauss_legendre(int order, int bits) {
  if (order < 1) {
    throw std::invalid_argument("Gauss-Legendre order must be positive");
  }
  bits = checked_precision(bits);
  static std::map<std::pair<int, int>, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(cache_mutex());
  auto& slot = cache[{order, bits}];
  if (!slot) {
    slot = std::make_unique<GaussRule>(compute_rule(order, bits));
  }
  return *slot;
}

const GaussRuleD& gauss_legendre_double(int order) {
  const GaussRule& mp_rule = gauss_legendre(order, 128);
  static std::map<int, std::unique_ptr<GaussRuleD>> cache;
  std::lock_guard lock(cache_mutex());
  auto& slot = cache[order];
  if (!slot) {
    slot = std::make_unique<GaussRuleD>();
    for (std::size_t i = 0; i < mp_rule.nodes.size(); ++i) {
      slot->nodes.push_back(mp_rule.nodes[i].to_double());
      slot->weights.push_back(mp_rule.weights[i].to_double());
    }
  }
  return *slot;
}

QuadratureRule composite_rule(const MpReal& a, const MpReal& b, const std::vector<double>& singular_points,
                              const CompositeOptions& options, int bits, const std::vector<double>& breakpoints) {
  if (!(a < b)) {
    throw std::invalid_argument("composite_rule: need a < b");
  }
  if (options.base_panels < 1 || options.order < 1) {
    throw std::invalid_argument("composite_rule: panels and order must be positive");
  }
  const MpReal len = b - a;
  std::vector<MpReal> edges;
  for (int i = 0; i <= options.base_panels; ++i) {
    edges.push_back((a * static_cast<double>(options.base_panels - i) + b * static_cast<double>(i)) /
                    static_cast<double>(options.base_panels));
  }
  std::vector<MpReal> sing;
  for (double s : singular_points) {
    MpReal sm(s, bits);
    if (sm >= a && sm <= b) {
      sing.push_back(sm);
    }
  }
  // A uniform edge close to a singular point would leave an ungraded panel
  // with a nearby singularity; the singular point replaces it.
  const MpReal crowd = len / static_cast<double>(4 * options.base_panels);
  std::erase_if(edges, [&](const MpReal& e) {
    if (e == a || e == b) {
      return false;
    }
    return std::any_of(sing.begin(), sing.end(), [&](const MpReal& s) { return abs(s - e) < crowd; });
  });
  for (const auto& sm : sing) {
    edges.push_back(sm);
  }
  for (double s : breakpoints) {
    MpReal sm(s, bits);
    if (sm > a && sm < b) {
      edges.push_back(sm);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const MpReal& x, const MpReal& y) { return x < y; });
  const MpReal merge = len * MpReal::pow2(-static_cast<long>(bits) / 2, bits);
  std::vector<MpReal> uniq;
  for (auto& e : edges) {
    if (uniq.empty() || e - uniq.back() > merge) {
      uniq.push_back(std::move(e));
    }
  }

  std::vector<MpReal> graded;
  for (std::size_t p = 0; p + 1 < uniq.size(); ++p) {
    const MpReal& lo = uniq[p];
    const MpReal& hi = uniq[p + 1];
    const auto near = [&](const MpReal& e) {
      return std::any_of(sing.begin(), sing.end(), [&](const MpReal& s) { return abs(s - e) <= merge; });
    };
    const bool left = near(lo);
    const bool right = near(hi);
    graded.push_back(lo);
    if (!left && !right) {
      continue;
    }
    // Split a doubly singular panel at its midpoint so each half grades one way.
    const MpReal mid = (lo + hi) / 2.0;
    std::vector<MpReal> inner;
    if (left) {
      const MpReal h = (right ? mid : hi) - lo;
      MpReal r(1L, bits);
      for (int j = 0; j < options.grading_levels; ++j) {
        r *= options.grading_ratio;
        inner.push_back(lo + h * r);
      }
    }
    if (left && right) {
      inner.push_back(mid);
    }
    if (right) {
      const MpReal h = hi - (left ? mid : lo);
      MpReal r(1L, bits);
      for (int j = 0; j < options.grading_levels; ++j) {
        r *= options.grading_ratio;
        inner.push_back(hi - h * r);
      }
    }
    std::sort(inner.begin(), inner.end(), [](const MpReal& x, const MpReal& y) { return x < y; });
    for (auto& e : inner) {
      graded.push_back(std::move(e));
    }
  }
  graded.push_back(uniq.back());

  const GaussRule& g = gauss_legendre(options.order, bits);
  QuadratureRule rule;
  rule.order = options.order;
  rule.nodes.reserve((graded.size() - 1) * g.nodes.size());
  rule.weights.reserve(rule.nodes.capacity());
  for (std::size_t p = 0; p + 1 < graded.size(); ++p) {
    const MpReal half = (graded[p + 1] - graded[p]) / 2.0;
    const MpReal centre = (graded[p + 1] + graded[p]) / 2.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      rule.nodes.push_back(centre + half * g.nodes[i]);
      rule.weights.push_back(half * g.weights[i]);
    }
  }
  rule.panel_edges.reserve(graded.size());
  for (const auto& e : graded) {
    rule.panel_edges.push_back(e.to_double());
  }
  return rule;
}

MpComplex integrate(const QuadratureRule& rule, const ComplexIntegrand& f) {
  const int bits = rule.nodes.empty() ? kMinPrecision : rule.nodes.front().precision();
  MpComplex sum = MpComplex::zero(bits);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum.add_product(f(rule.nodes[i]), rule.weights[i]);
  }
  return sum;
}

MpReal integrate(const QuadratureRule& rule, const RealIntegrand& f) {
  const int bits = rule.nodes.empty() ? kMinPrecision : rule.nodes.front().precision();
  MpReal sum(0L, bits);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum.add_product(f(rule.nodes[i]), rule.weights[i]);
  }
  return sum;
}

MpComplex gauss_legendre_panels(const ComplexIntegrand& f, const MpReal& a, const MpReal& b, int panels, int order,
                                const MpReal& tolerance, int max_doublings) {
  if (panels < 1) {
    throw std::invalid_argument("gauss_legendre_panels: panels must be >= 1");
  }
  const int bits = std::max(a.precision(), b.precision());
  auto run = [&](int p, int o) {
    CompositeOptions opt;
    opt.base_panels = p;
    opt.order = o;
    return integrate(composite_rule(a, b, {}, opt, bits), f);
  };
  MpComplex current = run(panels, order);
  MpReal change(0L, bits);
  for (int d = 0; d < std::max(1, max_doublings); ++d) {
    panels *= 2;
    order *= 2;
    MpComplex refined = run(panels, order);
    change = abs(refined - current);
    current = std::move(refined);
    if (change <= tolerance) {
      return current;
    }
  }
  throw ToleranceNotMet("Gauss-Legendre panels disagree by " + change.to_string(4) + " > tolerance " +
                        tolerance.to_string(4));
}

MpComplex graded_integrate(const ComplexIntegrand& f, const MpReal& a, const MpReal& b,
                           const std::vector<double>& singular_points, const MpReal& tolerance,
                           const CompositeOptions& options) {
  const int bits = std::max(a.precision(), b.precision());
  CompositeOptions fine = options;
  fine.order = options.order + options.order / 2;
  const MpComplex coarse_value = integrate(composite_rule(a, b, singular_points, options, bits), f);
  const MpComplex fine_value = integrate(composite_rule(a, b, singular_points, fine, bits), f);
  const MpReal change = abs(fine_value - coarse_value);
  if (change > tolerance) {
    throw ToleranceNotMet("graded quadrature changed by " + change.to_string(4) + " under order refinement");
  }
  return fine_value;
}

MpReal graded_integrate(const RealIntegrand& f, const MpReal& a, const MpReal& b,
                        const std::vector<double>& singular_points, const MpReal& tolerance,
                        const CompositeOptions& options) {
  return graded_integrate([&](const MpReal& x) { return to_complex(f(x)); }, a, b, singular_points, tolerance,
                          options)
      .re;
}

}  // namespace fextlab::mp
