#pragma once

namespace fextlab::arc {

/// J_nu(t) for nu in {0, 1} and t >= 0.
double bessel_j(int nu, double t);

}  // namespace fextlab::arc
