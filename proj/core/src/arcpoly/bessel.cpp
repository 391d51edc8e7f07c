#include "fextlab/arcpoly/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace fextlab::arc {

double bessel_j(int nu, double t) {
  if (nu != 0 && nu != 1) {
    throw std::invalid_argument("bessel_j supports orders 0 and 1 only");
  }
  if (t < 0.0) {
    throw std::invalid_argument("bessel_j needs t >= 0");
  }
  return std::cyl_bessel_j(static_cast<double>(nu), t);
}

}  // namespace fextlab::arc
