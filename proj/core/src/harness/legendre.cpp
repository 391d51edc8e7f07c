#include "fextlab/harness/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fextlab/errors.hpp"
#include "fextlab/mpcore/quadrature.hpp"

namespace fextlab::harness {

using mp::MpReal;
using mp::MpVector;

namespace {

// Calls visit(k, p_k(x)) for k < K with the normalized recurrence
// p_{k+1} = (sqrt((2k+1)(2k+3)) x p_k - k sqrt((2k+3)/(2k-1)) p_{k-1}) / (k+1).
template <typename Visit>
void normalized_legendre(const MpReal& x, int K, Visit visit) {
  const int bits = x.precision();
  MpReal prev(0L, bits);
  MpReal cur(1L, bits);
  for (int k = 0; k < K; ++k) {
    visit(k, cur);
    const double kk = k;
    MpReal next = mp::sqrt(MpReal((2 * kk + 1) * (2 * kk + 3), bits)) * x * cur;
    if (k > 0) {
      next -= kk * mp::sqrt(MpReal((2 * kk + 3) / (2 * kk - 1), bits)) * prev;
    }
    next /= kk + 1.0;
    prev = std::move(cur);
    cur = std::move(next);
  }
}

}  // namespace

LegendreBaseline::LegendreBaseline(MpVector coefficients) : a_(std::move(coefficients)) {}

MpReal LegendreBaseline::evaluate(const MpReal& x, int terms) const {
  const int K = terms < 0 ? size() : std::min(terms, size());
  const int bits = std::max(x.precision(), a_.empty() ? mp::kMinPrecision : a_.front().precision());
  MpReal sum(0L, bits);
  normalized_legendre(x.rounded(bits), K, [&](int k, const MpReal& p) { sum.add_product(a_[static_cast<std::size_t>(k)], p); });
  return sum;
}

std::vector<double> LegendreBaseline::partial_sums(const MpReal& x) const {
  const int bits = std::max(x.precision(), a_.empty() ? mp::kMinPrecision : a_.front().precision());
  std::vector<double> out;
  MpReal sum(0L, bits);
  normalized_legendre(x.rounded(bits), size(), [&](int k, const MpReal& p) {
    sum.add_product(a_[static_cast<std::size_t>(k)], p);
    out.push_back(sum.to_double());
  });
  return out;
}

LegendreBaseline legendre_series(const Function& f, int K, int bits, double tolerance) {
  if (K < 1) {
    throw std::invalid_argument("legendre_series: K must be positive");
  }
  if (!f.is_real) {
    throw std::invalid_argument("legendre_series: f must be real");
  }
  mp::CompositeOptions coarse;
  coarse.base_panels = std::max(coarse.base_panels, K / 4);
  mp::CompositeOptions fine = coarse;
  fine.order = coarse.order + coarse.order / 2;
  auto run = [&](const mp::CompositeOptions& opt) {
    const mp::QuadratureRule rule =
        mp::composite_rule(MpReal(-1L, bits), MpReal(1L, bits), f.singular_points, opt, bits, f.breakpoints);
    MpVector a(static_cast<std::size_t>(K), MpReal(0L, bits));
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const MpReal fw = f(rule.nodes[i]).re * rule.weights[i];
      normalized_legendre(rule.nodes[i], K, [&](int k, const MpReal& p) { a[static_cast<std::size_t>(k)].add_product(fw, p); });
    }
    for (auto& v : a) {
      v /= 2.0;
    }
    return a;
  };
  const MpVector a0 = run(coarse);
  MpVector a1 = run(fine);
  MpReal scale(0L, bits);
  MpReal change(0L, bits);
  for (std::size_t k = 0; k < a1.size(); ++k) {
    scale = mp::max(scale, abs(a1[k]));
    change = mp::max(change, abs(a1[k] - a0[k]));
  }
  if (change > scale * tolerance && change.sign() > 0) {
    throw ToleranceNotMet("Legendre coefficients for " + f.name + " moved by " + change.to_string(4) +
                          " under order refinement");
  }
  return LegendreBaseline(std::move(a1));
}

}  // namespace fextlab::harness
