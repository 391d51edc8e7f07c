#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fextlab/mpcore/mpcomplex.hpp"

namespace fextlab {

/// A target function with multiprecision and double evaluators.
///
/// Singular points are abscissae where f or a low derivative is not smooth;
/// quadrature grades its panels toward them. Breakpoints separate smooth
/// pieces (jumps, spline knots) and only become panel edges.
struct Function {
  std::string name;
  std::function<mp::MpComplex(const mp::MpReal&)> eval_mp;
  std::function<std::complex<double>(double)> eval;
  std::vector<double> singular_points;
  std::vector<double> breakpoints;
  bool is_real = true;

  std::complex<double> operator()(double x) const { return eval(x); }
  mp::MpComplex operator()(const mp::MpReal& x) const { return eval_mp(x); }

  /// Real function from one generic callable usable with both double and MpReal.
  template <typename F>
  static Function real(std::string name, F f, std::vector<double> singular = {}) {
    Function out;
    out.name = std::move(name);
    out.eval_mp = [f](const mp::MpReal& x) { return mp::MpComplex(f(x)); };
    out.eval = [f](double x) { return std::complex<double>(f(x), 0.0); };
    out.singular_points = std::move(singular);
    out.is_real = true;
    return out;
  }

  static Function complex(std::string name, std::function<mp::MpComplex(const mp::MpReal&)> mp_fn,
                          std::function<std::complex<double>(double)> fn, std::vector<double> singular = {}) {
    Function out;
    out.name = std::move(name);
    out.eval_mp = std::move(mp_fn);
    out.eval = std::move(fn);
    out.singular_points = std::move(singular);
    out.is_real = false;
    return out;
  }

  /// g(x) = f(a + (b - a)(x + 1)/2), a function on [-1, 1].
  Function mapped_from(double a, double b) const;
};

}  // namespace fextlab
