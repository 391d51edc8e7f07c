#include "fextlab/geometry/mapped_ellipse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fextlab/analysis/fit.hpp"
#include "fextlab/errors.hpp"

namespace fextlab::geometry {

namespace {
constexpr double kPi = std::numbers::pi;
}

double map_m(double x, double T) {
  const double c = std::cos(kPi / T);
  return 2.0 * (std::cos(kPi * x / T) - c) / (1.0 - c) - 1.0;
}

cd map_m_complex(cd z, double T) {
  const double c = std::cos(kPi / T);
  return 2.0 * (std::cos(kPi * z / T) - c) / (1.0 - c) - 1.0;
}

cd map_m_derivative(cd z, double T) {
  const double c = std::cos(kPi / T);
  return -2.0 * (kPi / T) * std::sin(kPi * z / T) / (1.0 - c);
}

double bernstein_param(cd t) {
  const cd s = std::sqrt(t * t - 1.0);
  const double r = std::max(std::abs(t + s), std::abs(t - s));
  return std::max(r, 1.0);
}

double rate_cap(double T) {
  const double c = 1.0 / std::tan(kPi / (4.0 * T));
  return c * c;
}

double predicted_rate(cd singularity, double T) {
  return std::min(bernstein_param(map_m_complex(singularity, T)), rate_cap(T));
}

double predicted_rate_entire(double T) { return rate_cap(T); }

MappedEllipse mapped_ellipse_contour(double rho, double T, int samples) {
  if (!(rho > 1.0) || !(rho < rate_cap(T)) || samples < 4) {
    throw std::invalid_argument("contour needs 1 < rho < cot^2(pi / 4T) and at least 4 samples");
  }
  const double c = std::cos(kPi / T);
  MappedEllipse out;
  out.rho = rho;
  out.T = T;
  out.samples = samples;
  out.points.reserve(static_cast<std::size_t>(2 * samples));

  cd previous;
  for (int i = 0; i < samples; ++i) {
    const double theta = 2.0 * kPi * i / samples;
    const cd t = 0.5 * (rho * std::polar(1.0, theta) + std::polar(1.0 / rho, -theta));
    const cd w = c + (1.0 - c) * (t + 1.0) / 2.0;
    const cd z0 = (T / kPi) * std::acos(w);
    cd z;
    if (i == 0) {
      // Start on the positive imaginary axis.
      z = cd(0.0, std::abs(z0.imag()));
    } else {
      // Preimages are +-z0 + 2Tk; keep the one continuing the curve.
      z = z0;
      double best = std::numeric_limits<double>::infinity();
      for (int k = -1; k <= 1; ++k) {
        for (double s : {1.0, -1.0}) {
          const cd cand = s * z0 + 2.0 * T * k;
          if (std::abs(cand - previous) < best) {
            best = std::abs(cand - previous);
            z = cand;
          }
        }
      }
    }
    for (int it = 0; it < 50; ++it) {
      const cd step = (map_m_complex(z, T) - t) / map_m_derivative(z, T);
      z -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) {
        break;
      }
    }
    const double miss = std::abs(map_m_complex(z, T) - t);
    if (!(miss < 1e-10 * std::max(1.0, std::abs(t)))) {
      throw RootNotFound("m-inversion failed at theta = " + std::to_string(theta) + " (residual " +
                         std::to_string(miss) + ")");
    }
    out.points.push_back(z);
    previous = z;
  }
  for (int i = 0; i < samples; ++i) {
    out.points.push_back(-out.points[static_cast<std::size_t>(i)]);
  }
  return out;
}

RateFit fit_exponential_rate(const std::vector<int>& ns, const std::vector<double>& errors) {
  if (ns.size() != errors.size() || ns.size() < 2) {
    throw std::invalid_argument("rate fit needs at least two (n, error) pairs");
  }
  const double floor_level = 10.0 * errors.back();
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (errors[i] > floor_level && errors[i] > 0.0) {
      xs.push_back(ns[i]);
      ys.push_back(std::log(errors[i]));
    }
  }
  if (xs.size() < 2) {
    throw std::invalid_argument("rate fit: fewer than two points above the plateau");
  }
  const analysis::LinearFit line = analysis::linear_fit(xs, ys);
  RateFit fit;
  fit.slope = line.slope;
  fit.rho = std::exp(-line.slope);
  fit.residual = line.residual;
  fit.used = line.points;
  return fit;
}

}  // namespace fextlab::geometry
