#include "fextlab/analysis/remez.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fextlab/errors.hpp"

namespace fextlab::analysis {

using mp::MpReal;
using mp::MpVector;

namespace {

constexpr double kPi = std::numbers::pi;

double u_of_x(double x, double T, double gamma) { return std::sin(kPi * x / (2.0 * T)) / gamma; }
double x_of_u(double u, double T, double gamma) {
  return (2.0 * T / kPi) * std::asin(std::clamp(gamma * u, -1.0, 1.0));
}

// Cosine-series vector times c = cos(theta).
MpVector times_cos(const MpVector& v, int bits) {
  MpVector out(v.size() + 1, MpReal::zero(bits));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k == 0) {
      out[1] += v[0];
    } else {
      const MpReal h = v[k] / 2.0;
      out[k + 1] += h;
      out[k - 1] += h;
    }
  }
  return out;
}

// alpha * (c v) + beta * v, i.e. multiplication by s = 2u^2 - 1.
MpVector times_s(const MpVector& v, const MpReal& alpha, const MpReal& beta, int bits) {
  MpVector out = times_cos(v, bits);
  for (auto& e : out) {
    e *= alpha;
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    out[k].add_product(beta, v[k]);
  }
  return out;
}

MpVector three_term(const MpVector& s_prev, const MpVector& prev, int bits) {
  // 2 s_prev - prev, with s_prev one entry longer.
  MpVector out(s_prev.size(), MpReal::zero(bits));
  for (std::size_t k = 0; k < s_prev.size(); ++k) {
    out[k] = 2.0 * s_prev[k];
    if (k < prev.size()) {
      out[k] -= prev[k];
    }
  }
  return out;
}

}  // namespace

ArcChebyshevSeries::ArcChebyshevSeries(double T, std::vector<double> even, std::vector<double> odd)
    : T_(T), gamma_(std::sin(kPi / (2.0 * T))), even_(std::move(even)), odd_(std::move(odd)) {
  if (even_.empty() || odd_.size() + 1 != even_.size()) {
    throw std::invalid_argument("ArcChebyshevSeries: need n + 1 even and n odd coefficients");
  }
}

void ArcChebyshevSeries::basis(double u, double gamma, int n, double* out) {
  const double w = std::sqrt(std::max(0.0, 1.0 - gamma * gamma * u * u));
  double t0 = 1.0;
  double t1 = u;
  out[0] = 1.0;
  if (n > 0) {
    out[n + 1] = w * u;
  }
  for (int m = 2; m <= 2 * n; ++m) {
    const double t2 = 2.0 * u * t1 - t0;
    t0 = t1;
    t1 = t2;
    if (m % 2 == 0) {
      out[m / 2] = t2;
    } else {
      out[n + 1 + m / 2] = w * t2;
    }
  }
}

double ArcChebyshevSeries::operator()(double x) const {
  const int nn = n();
  std::vector<double> b(static_cast<std::size_t>(2 * nn + 1));
  basis(u_of_x(x, T_, gamma_), gamma_, nn, b.data());
  double s = 0.0;
  for (int j = 0; j <= nn; ++j) {
    s += even_[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
  }
  for (int j = 0; j < nn; ++j) {
    s += odd_[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(nn + 1 + j)];
  }
  return s;
}

std::pair<MpVector, MpVector> ArcChebyshevSeries::trig_coefficients(int bits) const {
  const int nn = n();
  const MpReal gamma = mp::sin(MpReal::pi(bits) / (2.0 * T_));
  const MpReal g2 = gamma * gamma;
  const MpReal alpha = -1.0 / g2;
  const MpReal beta = 1.0 / g2 - 1.0;

  MpVector a(static_cast<std::size_t>(nn + 1), MpReal::zero(bits));
  MpVector b(static_cast<std::size_t>(nn + 1), MpReal::zero(bits));
  auto add_cos = [&](const MpVector& v, double coef) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      a[k].add_product(v[k], MpReal(coef, bits));
    }
  };
  // T_{2j}(u) = T_j(s).
  MpVector e_prev{MpReal::one(bits)};
  add_cos(e_prev, even_[0]);
  if (nn >= 1) {
    MpVector e_cur = times_s(e_prev, alpha, beta, bits);
    add_cos(e_cur, even_[1]);
    for (int j = 1; j < nn; ++j) {
      MpVector next = three_term(times_s(e_cur, alpha, beta, bits), e_prev, bits);
      add_cos(next, even_[static_cast<std::size_t>(j + 1)]);
      e_prev = std::move(e_cur);
      e_cur = std::move(next);
    }
  }
  // w T_{2j+1}(u) = sin(theta) / (2 gamma) R_j(s), R_0 = 1, R_1 = 2s - 1.
  MpVector r_acc(static_cast<std::size_t>(std::max(nn, 1)), MpReal::zero(bits));
  auto add_r = [&](const MpVector& v, double coef) {
    for (std::size_t k = 0; k < v.size() && k < r_acc.size(); ++k) {
      r_acc[k].add_product(v[k], MpReal(coef, bits));
    }
  };
  if (nn >= 1) {
    MpVector r_prev{MpReal::one(bits)};
    add_r(r_prev, odd_[0]);
    if (nn >= 2) {
      MpVector r_cur = times_s(r_prev, alpha, beta, bits);
      for (auto& e : r_cur) e *= 2.0;
      r_cur[0] -= 1.0;
      add_r(r_cur, odd_[1]);
      for (int j = 1; j + 1 < nn; ++j) {
        MpVector next = three_term(times_s(r_cur, alpha, beta, bits), r_prev, bits);
        add_r(next, odd_[static_cast<std::size_t>(j + 1)]);
        r_prev = std::move(r_cur);
        r_cur = std::move(next);
      }
    }
    const MpReal scale = 1.0 / (2.0 * gamma);
    for (std::size_t k = 0; k < r_acc.size(); ++k) {
      const MpReal v = r_acc[k] * scale;
      if (k == 0) {
        b[1] += v;
      } else if (k == 1) {
        b[2] += v / 2.0;
      } else {
        b[k + 1] += v / 2.0;
        b[k - 1] -= v / 2.0;
      }
    }
  }
  return {std::move(a), std::move(b)};
}

Extension ArcChebyshevSeries::to_extension(int bits) const {
  auto [a, b] = trig_coefficients(bits);
  const int nn = n();
  mp::CVector c(static_cast<std::size_t>(2 * nn + 1), mp::MpComplex::zero(bits));
  c[static_cast<std::size_t>(nn)] = mp::MpComplex(a[0]);
  for (int k = 1; k <= nn; ++k) {
    const auto K = static_cast<std::size_t>(k);
    c[static_cast<std::size_t>(nn + k)] = mp::MpComplex(a[K] / 2.0, -b[K] / 2.0);
    c[static_cast<std::size_t>(nn - k)] = mp::MpComplex(a[K] / 2.0, b[K] / 2.0);
  }
  return Extension(T_, std::move(c));
}

MinimaxResult remez(const std::function<double(double)>& f, int N, double T, const RemezOptions& options) {
  if (N < 1 || N % 2 == 0) {
    throw std::invalid_argument("remez: N must be odd and positive");
  }
  if (!(T > 1.0)) {
    throw std::invalid_argument("remez: T must exceed 1");
  }
  const int n = (N - 1) / 2;
  const double gamma = std::sin(kPi / (2.0 * T));
  const auto fu = [&](double u) { return f(x_of_u(u, T, gamma)); };

  // Search points in u, ascending.
  std::vector<double> search;
  const bool discrete = options.grid.has_value();
  if (discrete) {
    for (double x : *options.grid) {
      if (x < -1.0 || x > 1.0) {
        throw std::invalid_argument("remez: grid point outside [-1, 1]");
      }
      search.push_back(u_of_x(x, T, gamma));
    }
    std::sort(search.begin(), search.end());
    search.erase(std::unique(search.begin(), search.end()), search.end());
    if (static_cast<int>(search.size()) < N + 1) {
      throw DegenerateReference("remez: grid has fewer than N + 1 points");
    }
  } else {
    const int m = options.search_points > 0 ? options.search_points : std::max(2000, 40 * N);
    for (int i = 0; i <= m; ++i) {
      search.push_back(-std::cos(kPi * i / m));
    }
  }
  std::vector<double> fsearch(search.size());
  double fscale = 0.0;
  for (std::size_t i = 0; i < search.size(); ++i) {
    fsearch[i] = fu(search[i]);
    fscale = std::max(fscale, std::abs(fsearch[i]));
  }

  std::vector<double> ref;
  if (discrete) {
    // Evenly spread indices into the discrete set.
    const std::size_t last = search.size() - 1;
    for (int i = 0; i <= N; ++i) {
      ref.push_back(search[(last * static_cast<std::size_t>(i) + static_cast<std::size_t>(N) / 2) /
                           static_cast<std::size_t>(N)]);
    }
  } else {
    for (int i = 0; i <= N; ++i) {
      ref.push_back(-std::cos(kPi * i / N));
    }
  }

  std::vector<double> bvals(static_cast<std::size_t>(N));
  Eigen::VectorXd coef(N);
  const auto r_at = [&](double u) {
    ArcChebyshevSeries::basis(u, gamma, n, bvals.data());
    double s = 0.0;
    for (int j = 0; j < N; ++j) s += coef(j) * bvals[static_cast<std::size_t>(j)];
    return s;
  };

  MinimaxResult result;
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    Eigen::MatrixXd A(N + 1, N + 1);
    Eigen::VectorXd rhs(N + 1);
    for (int i = 0; i <= N; ++i) {
      ArcChebyshevSeries::basis(ref[static_cast<std::size_t>(i)], gamma, n, bvals.data());
      for (int j = 0; j < N; ++j) A(i, j) = bvals[static_cast<std::size_t>(j)];
      A(i, N) = (i % 2 == 0) ? 1.0 : -1.0;
      rhs(i) = fu(ref[static_cast<std::size_t>(i)]);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (!lu.isInvertible()) {
      throw DegenerateReference("remez: singular reference system");
    }
    const Eigen::VectorXd sol = lu.solve(rhs);
    coef = sol.head(N);
    const double levelled = std::abs(sol(N));

    // Signed error on the search set and its sign runs.
    std::vector<double> err(search.size());
    for (std::size_t i = 0; i < search.size(); ++i) err[i] = fsearch[i] - r_at(search[i]);
    const auto e_at = [&](double u) { return fu(u) - r_at(u); };

    std::vector<double> pts;
    std::vector<double> vals;
    std::size_t i = 0;
    while (i < err.size()) {
      if (err[i] == 0.0) {
        ++i;
        continue;
      }
      const bool positive = err[i] > 0.0;
      std::size_t best = i;
      std::size_t j = i;
      while (j < err.size() && err[j] != 0.0 && (err[j] > 0.0) == positive) {
        if (std::abs(err[j]) > std::abs(err[best])) best = j;
        ++j;
      }
      double u = search[best];
      double v = err[best];
      if (!discrete) {
        // Golden-section polish of the extremum inside the neighbouring bracket.
        double lo = search[best > 0 ? best - 1 : 0];
        double hi = search[std::min(best + 1, search.size() - 1)];
        const double sign = positive ? 1.0 : -1.0;
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = hi - g * (hi - lo);
        double d = lo + g * (hi - lo);
        double fc = sign * e_at(c);
        double fd = sign * e_at(d);
        for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
          if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - g * (hi - lo);
            fc = sign * e_at(c);
          } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + g * (hi - lo);
            fd = sign * e_at(d);
          }
        }
        const double cand = 0.5 * (lo + hi);
        const double cv = e_at(cand);
        if (sign * cv > sign * v) {
          u = cand;
          v = cv;
        }
      }
      pts.push_back(u);
      vals.push_back(v);
      i = j;
    }

    double max_err = 0.0;
    for (double v : vals) max_err = std::max(max_err, std::abs(v));

    if (max_err <= options.absolute_tolerance * std::max(1.0, fscale)) {
      // f lies in H_N up to rounding.
      result.E = max_err;
      result.levelled = levelled;
      result.iterations = iter;
      result.alternation_points.clear();
      result.alternation_errors.clear();
      for (double u : ref) {
        result.alternation_points.push_back(x_of_u(u, T, gamma));
        result.alternation_errors.push_back(e_at(u));
      }
      break;
    }
    if (static_cast<int>(pts.size()) < N + 1) {
      // Too few sign runs for a full exchange: swap the global extremum into the
      // reference, keeping the alternation pattern.
      std::size_t top = 0;
      for (std::size_t k = 1; k < vals.size(); ++k) {
        if (std::abs(vals[k]) > std::abs(vals[top])) top = k;
      }
      if (vals.empty() || std::abs(vals[top]) <= levelled) {
        throw DegenerateReference("remez: only " + std::to_string(pts.size()) + " alternating extrema for N = " +
                                  std::to_string(N));
      }
      const double ustar = pts[top];
      const bool up = vals[top] > 0.0;
      // Sign of the error at ref[k] is that of (-1)^k times the levelled error.
      const bool level_up = sol(N) >= 0.0;
      const auto sign_at = [&](std::size_t k) { return (k % 2 == 0) == level_up; };
      const auto pos = static_cast<std::size_t>(std::upper_bound(ref.begin(), ref.end(), ustar) - ref.begin());
      if (pos == 0) {
        if (sign_at(0) == up) {
          ref[0] = ustar;
        } else {
          ref.insert(ref.begin(), ustar);
          ref.pop_back();
        }
      } else if (pos == ref.size()) {
        if (sign_at(pos - 1) == up) {
          ref[pos - 1] = ustar;
        } else {
          ref.push_back(ustar);
          ref.erase(ref.begin());
        }
      } else if (sign_at(pos - 1) == up) {
        ref[pos - 1] = ustar;
      } else {
        ref[pos] = ustar;
      }
      if (iter == options.max_iterations) {
        throw ExchangeStalled("remez: no convergence after " + std::to_string(iter) + " exchanges");
      }
      continue;
    }
    std::size_t first = 0;
    std::size_t last = pts.size();
    while (last - first > static_cast<std::size_t>(N + 1)) {
      if (std::abs(vals[first]) < std::abs(vals[last - 1])) {
        ++first;
      } else {
        --last;
      }
    }
    ref.assign(pts.begin() + static_cast<std::ptrdiff_t>(first), pts.begin() + static_cast<std::ptrdiff_t>(last));

    if (max_err - levelled <= options.tolerance * max_err) {
      result.E = max_err;
      result.levelled = levelled;
      result.iterations = iter;
      for (std::size_t k = first; k < last; ++k) {
        result.alternation_points.push_back(x_of_u(pts[k], T, gamma));
        result.alternation_errors.push_back(vals[k]);
      }
      break;
    }
    if (iter == options.max_iterations) {
      throw ExchangeStalled("remez: no convergence after " + std::to_string(iter) + " exchanges (gap " +
                            std::to_string((max_err - levelled) / max_err) + ")");
    }
  }

  std::vector<double> even(static_cast<std::size_t>(n + 1));
  std::vector<double> odd(static_cast<std::size_t>(n));
  for (int j = 0; j <= n; ++j) even[static_cast<std::size_t>(j)] = coef(j);
  for (int j = 0; j < n; ++j) odd[static_cast<std::size_t>(j)] = coef(n + 1 + j);
  result.best = ArcChebyshevSeries(T, std::move(even), std::move(odd));
  return result;
}

}  // namespace fextlab::analysis
