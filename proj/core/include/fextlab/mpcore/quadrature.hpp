#pragma once

#include <functional>
#include <vector>

#include "fextlab/mpcore/linalg.hpp"

namespace fextlab::mp {

using RealIntegrand = std::function<MpReal(const MpReal&)>;
using ComplexIntegrand = std::function<MpComplex(const MpReal&)>;

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  MpVector nodes;
  MpVector weights;
};

/// Cached n-point rule at the given precision. Thread safe.
const GaussRule& gauss_legendre(int order, int bits);

/// Same rule rounded to double; cached.
struct GaussRuleD {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRuleD& gauss_legendre_double(int order);

/// A composite rule: every panel carries `order` Gauss points.
struct QuadratureRule {
  MpVector nodes;
  MpVector weights;
  std::vector<double> panel_edges;
  int order = 0;

  std::size_t size() const noexcept { return nodes.size(); }
};

struct CompositeOptions {
  int order = 32;
  int base_panels = 4;
  double grading_ratio = 0.25;
  int grading_levels = 40;
};

/// Uniform panels on [a, b], refined geometrically toward each singular point
/// that lies in [a, b]. Singular points and breakpoints also become panel edges;
/// breakpoints get no grading.
QuadratureRule composite_rule(const MpReal& a, const MpReal& b, const std::vector<double>& singular_points,
                              const CompositeOptions& options, int bits,
                              const std::vector<double>& breakpoints = {});

MpComplex integrate(const QuadratureRule& rule, const ComplexIntegrand& f);
MpReal integrate(const QuadratureRule& rule, const RealIntegrand& f);

/// Panel-summed Gauss-Legendre on [a, b]. The estimate is accepted once doubling
/// both panels and order moves it by at most `tolerance`; otherwise the
/// doubling repeats up to `max_doublings` times and then throws ToleranceNotMet.
MpComplex gauss_legendre_panels(const ComplexIntegrand& f, const MpReal& a, const MpReal& b, int panels, int order,
                                const MpReal& tolerance, int max_doublings = 3);

/// Graded composite quadrature with an order-32 vs order-48 agreement check.
MpComplex graded_integrate(const ComplexIntegrand& f, const MpReal& a, const MpReal& b,
                           const std::vector<double>& singular_points, const MpReal& tolerance,
                           const CompositeOptions& options = {});
MpReal graded_integrate(const RealIntegrand& f, const MpReal& a, const MpReal& b,
                        const std::vector<double>& singular_points, const MpReal& tolerance,
                        const CompositeOptions& options = {});

}  // namespace fextlab::mp
