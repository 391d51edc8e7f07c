#include "fextlab/fourext/function.hpp"

#include <stdexcept>

namespace fextlab {

Function Function::mapped_from(double a, double b) const {
  if (!(a < b)) {
    throw std::invalid_argument("mapped_from: need a < b");
  }
  if (a == -1.0 && b == 1.0) {
    return *this;
  }
  Function g = *this;
  const auto inner_mp = eval_mp;
  const auto inner = eval;
  g.eval_mp = [inner_mp, a, b](const mp::MpReal& x) {
    const mp::MpReal t = mp::MpReal(a, x.precision()) + (x + 1.0) * ((b - a) / 2.0);
    return inner_mp(t);
  };
  g.eval = [inner, a, b](double x) { return inner(a + (b - a) * (x + 1.0) / 2.0); };
  g.singular_points.clear();
  for (double s : singular_points) {
    g.singular_points.push_back(2.0 * (s - a) / (b - a) - 1.0);
  }
  g.breakpoints.clear();
  for (double s : breakpoints) {
    g.breakpoints.push_back(2.0 * (s - a) / (b - a) - 1.0);
  }
  return g;
}

}  // namespace fextlab
