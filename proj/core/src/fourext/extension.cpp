#include "fextlab/fourext/extension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fextlab/errors.hpp"

namespace fextlab {

using mp::CVector;
using mp::MpComplex;
using mp::MpReal;

void FEProblem::validate() const {
  if (!(T > 1.0)) {
    throw std::invalid_argument("T must exceed 1, got " + std::to_string(T));
  }
  if (n < 0) {
    throw std::invalid_argument("n must be nonnegative");
  }
  if (!(a < b)) {
    throw std::invalid_argument("domain must satisfy a < b");
  }
  mp::checked_precision(precision_bits);
}

int FEProblem::default_precision(int N) { return std::max(256, 24 * N); }

FEProblem FEProblem::with_N(double T, int N, int precision_bits) {
  if (N < 1 || N % 2 == 0) {
    throw std::invalid_argument("N must be odd and positive, got " + std::to_string(N));
  }
  FEProblem p;
  p.T = T;
  p.n = (N - 1) / 2;
  p.precision_bits = precision_bits > 0 ? precision_bits : default_precision(N);
  return p;
}

Extension::Extension(double T, CVector coefficients) : T_(T), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() % 2 == 0) {
    throw std::invalid_argument("Extension needs an odd number of coefficients");
  }
  coeffs_d_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    coeffs_d_.push_back(c.to_complex());
  }
}

int Extension::precision() const noexcept {
  int bits = mp::kMinPrecision;
  for (const auto& c : coeffs_) {
    bits = std::max(bits, c.precision());
  }
  return bits;
}

int Extension::evaluation_bits() const {
  long top = 0;
  for (const auto& c : coeffs_) {
    top = std::max({top, c.re.exponent(), c.im.exponent()});
  }
  return static_cast<int>(std::clamp<long>(top + 192, 128, precision()));
}

namespace {

// sum_k c_k z^k over k = -n..n with z = exp(i pi x / T); with `differentiate`
// each term is also multiplied by i pi k / T.
MpComplex sum_series(const CVector& c, double T, const MpReal& x, bool differentiate) {
  const int bits = std::max(x.precision(), c.front().precision());
  const int n = static_cast<int>(c.size() / 2);
  const MpReal pi_T = MpReal::pi(bits) / T;
  const MpComplex z = MpComplex::unit(pi_T * x.rounded(bits));
  const MpComplex zc = conj(z);
  MpComplex sum = differentiate ? MpComplex::zero(bits) : c[static_cast<std::size_t>(n)];
  MpComplex zp = z;
  MpComplex zm = zc;
  for (int k = 1; k <= n; ++k) {
    if (differentiate) {
      // i k (c_k z^k - c_{-k} z^{-k})
      MpComplex t = c[static_cast<std::size_t>(n + k)] * zp - c[static_cast<std::size_t>(n - k)] * zm;
      sum += MpComplex(-t.im, t.re) * static_cast<double>(k);
    } else {
      sum.add_product(zp, c[static_cast<std::size_t>(n + k)]);
      sum.add_product(zm, c[static_cast<std::size_t>(n - k)]);
    }
    zp *= z;
    zm *= zc;
  }
  if (differentiate) {
    sum *= pi_T;
  }
  return sum;
}

}  // namespace

MpComplex Extension::evaluate(const MpReal& x) const { return sum_series(coeffs_, T_, x, false); }

std::complex<double> Extension::evaluate(double x) const {
  const int n = this->n();
  std::complex<double> sum = coeffs_d_[static_cast<std::size_t>(n)];
  for (int k = 1; k <= n; ++k) {
    const std::complex<double> z = std::polar(1.0, std::numbers::pi * k * x / T_);
    sum += coeffs_d_[static_cast<std::size_t>(n + k)] * z + coeffs_d_[static_cast<std::size_t>(n - k)] * std::conj(z);
  }
  return sum;
}

MpComplex Extension::derivative(const MpReal& x) const { return sum_series(coeffs_, T_, x, true); }

std::complex<double> Extension::derivative(double x) const {
  const int n = this->n();
  std::complex<double> sum(0.0, 0.0);
  for (int k = 1; k <= n; ++k) {
    const std::complex<double> z = std::polar(1.0, std::numbers::pi * k * x / T_);
    const std::complex<double> ik(0.0, std::numbers::pi * k / T_);
    sum += ik * (coeffs_d_[static_cast<std::size_t>(n + k)] * z - coeffs_d_[static_cast<std::size_t>(n - k)] * std::conj(z));
  }
  return sum;
}

Extension Extension::rounded(int bits) const {
  CVector c;
  c.reserve(coeffs_.size());
  for (const auto& v : coeffs_) {
    c.push_back(v.rounded(bits));
  }
  Extension out(T_, std::move(c));
  out.epsilon = epsilon;
  out.retained_count = retained_count;
  out.solve_precision = solve_precision;
  return out;
}

Extension operator+(const Extension& a, const Extension& b) {
  if (a.T() != b.T()) {
    throw std::invalid_argument("cannot add extensions with different T");
  }
  const Extension& big = a.N() >= b.N() ? a : b;
  const Extension& small = a.N() >= b.N() ? b : a;
  CVector c = big.coefficients();
  for (int k = -small.n(); k <= small.n(); ++k) {
    c[static_cast<std::size_t>(k + big.n())] += small.coefficient(k);
  }
  return Extension(a.T(), std::move(c));
}

mp::HermitianToeplitz build_gram(double T, int N, int bits) {
  if (!(T > 1.0) || N < 1) {
    throw std::invalid_argument("build_gram: need T > 1 and N >= 1");
  }
  const MpReal step = MpReal::pi(bits) / T;
  mp::MpVector row;
  row.reserve(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) {
    row.push_back(mp::sinc(step * static_cast<double>(j)));
  }
  return mp::HermitianToeplitz(std::move(row));
}

CVector build_rhs(const Function& f, const FEProblem& problem, const RhsOptions& options) {
  problem.validate();
  const Function g = f.mapped_from(problem.a, problem.b);
  const int bits = problem.precision_bits;
  const int n = problem.n;
  const double T = problem.T;

  // Keep the per-panel phase of exp(i pi n x / T) below about 3 radians.
  mp::CompositeOptions coarse = options.quadrature;
  const int phase_panels = static_cast<int>(std::ceil(2.0 * std::numbers::pi * n / (3.0 * T)));
  coarse.base_panels = std::max(coarse.base_panels, phase_panels);
  mp::CompositeOptions fine = coarse;
  fine.order = coarse.order + coarse.order / 2;

  const MpReal lo(-1L, bits);
  const MpReal hi(1L, bits);
  const MpReal pi_over_T = MpReal::pi(bits) / T;
  auto run = [&](const mp::CompositeOptions& opt) {
    const mp::QuadratureRule rule = mp::composite_rule(lo, hi, g.singular_points, opt, bits, g.breakpoints);
    CVector acc(static_cast<std::size_t>(2 * n + 1), MpComplex::zero(bits));
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const MpComplex fw = g(rule.nodes[i]) * rule.weights[i];
      // exp(-i pi k x / T) for k >= 0; negative k use the conjugate power.
      const MpComplex w = MpComplex::unit(-(pi_over_T * rule.nodes[i]));
      acc[static_cast<std::size_t>(n)] += fw;
      MpComplex p = w;
      for (int k = 1; k <= n; ++k) {
        acc[static_cast<std::size_t>(n + k)].add_product(fw, p);
        acc[static_cast<std::size_t>(n - k)].add_product(fw, conj(p));
        p *= w;
      }
    }
    return acc;
  };
  CVector b0 = run(coarse);
  CVector b1 = run(fine);

  MpReal scale(0L, bits);
  MpReal change(0L, bits);
  for (std::size_t k = 0; k < b1.size(); ++k) {
    scale = mp::max(scale, abs(b1[k]));
    change = mp::max(change, abs(b1[k] - b0[k]));
  }
  if (change > scale * options.tolerance && change.sign() > 0) {
    throw ToleranceNotMet("rhs quadrature for " + f.name + ": order refinement moved b by " + change.to_string(4) +
                          " (relative tolerance " + std::to_string(options.tolerance) + ")");
  }
  const MpReal factor = mp::sqrt(MpReal(T, bits) / 2.0);
  for (auto& v : b1) {
    v *= factor;
  }
  return b1;
}

ProlateSystem assemble(const Function& f, const FEProblem& problem, const RhsOptions& options) {
  problem.validate();
  ProlateSystem s;
  s.problem = problem;
  s.G = build_gram(problem.T, problem.N(), problem.precision_bits);
  s.b = build_rhs(f, problem, options);
  return s;
}

ProlateSystem ProlateSystem::sliced(int m, int bits) const {
  if (m < 0 || m > problem.n) {
    throw std::invalid_argument("sliced: m out of range");
  }
  ProlateSystem s;
  s.problem = problem;
  s.problem.n = m;
  s.problem.precision_bits = bits;
  mp::MpVector row;
  for (int j = 0; j < 2 * m + 1; ++j) {
    row.push_back(G.first_row()[static_cast<std::size_t>(j)].rounded(bits));
  }
  s.G = mp::HermitianToeplitz(std::move(row));
  for (int k = -m; k <= m; ++k) {
    s.b.push_back(b[static_cast<std::size_t>(k + problem.n)].rounded(bits));
  }
  return s;
}

namespace {

CVector scaled_rhs(const ProlateSystem& system) {
  const int bits = system.problem.precision_bits;
  const MpReal inv = 1.0 / mp::sqrt(MpReal(2.0 * system.problem.T, bits));
  CVector rhs;
  rhs.reserve(system.b.size());
  for (const auto& v : system.b) {
    rhs.push_back(v.rounded(bits) * inv);
  }
  return rhs;
}

}  // namespace

Extension solve_exact(const ProlateSystem& system) {
  const int bits = system.problem.precision_bits;
  const CVector rhs = scaled_rhs(system);
  const mp::MpMatrix L = mp::cholesky(system.G);
  CVector c = mp::cholesky_solve(L, rhs);

  const CVector r = system.G.dense() * c;
  MpReal worst(0L, bits);
  MpReal scale(1L, bits);
  for (std::size_t k = 0; k < r.size(); ++k) {
    worst = mp::max(worst, abs(r[k] - rhs[k]));
    scale = mp::max(scale, abs(rhs[k]));
  }
  const MpReal bound = scale * MpReal::pow2(-bits / 2, bits);
  if (worst > bound) {
    throw ResidualTooLarge("normal-equation residual " + worst.to_string(4) + " exceeds " + bound.to_string(4) +
                           " at " + std::to_string(bits) + " bits");
  }
  Extension ext(system.problem.T, std::move(c));
  ext.retained_count = r.size();
  ext.solve_precision = bits;
  return ext;
}

Extension solve_regularized(const ProlateSystem& system, const mp::EigenDecomposition& eig, double eps) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  const int bits = system.problem.precision_bits;
  const CVector rhs = scaled_rhs(system);
  const std::size_t N = rhs.size();
  if (eig.eigenvalues.size() != N) {
    throw std::invalid_argument("eigendecomposition size does not match the system");
  }
  CVector c(N, MpComplex::zero(bits));
  std::size_t kept = 0;
  for (std::size_t j = 0; j < N; ++j) {
    if (eig.eigenvalues[j] < eps) {
      continue;
    }
    ++kept;
    MpComplex proj = MpComplex::zero(bits);
    for (std::size_t i = 0; i < N; ++i) {
      proj.add_product(rhs[i], eig.eigenvectors(i, j));
    }
    proj /= eig.eigenvalues[j];
    for (std::size_t i = 0; i < N; ++i) {
      c[i].add_product(proj, eig.eigenvectors(i, j));
    }
  }
  Extension ext(system.problem.T, std::move(c));
  ext.epsilon = eps;
  ext.retained_count = kept;
  ext.solve_precision = bits;
  return ext;
}

Extension solve_regularized(const ProlateSystem& system, double eps) {
  return solve_regularized(system, mp::jacobi_eigen(system.G, system.problem.precision_bits), eps);
}

Extension fit(const Function& f, FEProblem problem, const FitOptions& options) {
  problem.validate();
  for (int attempt = 0;; ++attempt) {
    try {
      return solve_exact(assemble(f, problem, options.rhs));
    } catch (const NotPositiveDefinite&) {
      if (attempt >= options.max_escalations) {
        throw;
      }
    } catch (const ResidualTooLarge&) {
      if (attempt >= options.max_escalations) {
        throw;
      }
    }
    problem.precision_bits *= 2;
  }
}

Extension fit_sliced(const ProlateSystem& full, int m, const Function& f, const FitOptions& options) {
  int bits = FEProblem::default_precision(2 * m + 1);
  for (int attempt = 0;; ++attempt) {
    try {
      if (bits <= full.problem.precision_bits) {
        return solve_exact(full.sliced(m, bits));
      }
      FEProblem p = full.problem;
      p.n = m;
      p.precision_bits = bits;
      return solve_exact(assemble(f, p, options.rhs));
    } catch (const NotPositiveDefinite&) {
      if (attempt >= options.max_escalations) {
        throw;
      }
    } catch (const ResidualTooLarge&) {
      if (attempt >= options.max_escalations) {
        throw;
      }
    }
    bits *= 2;
  }
}

double sup_error(const Function& f, const Extension& ext, const std::vector<double>& grid) {
  const Extension e = ext.rounded(ext.evaluation_bits());
  const int bits = e.precision();
  MpReal worst(0L, bits);
  for (double x : grid) {
    const MpReal xm(x, bits);
    worst = mp::max(worst, abs(f(xm) - e.evaluate(xm)));
  }
  return worst.to_double();
}

ErrorNorms error_norms(const Function& f, const Extension& ext, const std::vector<double>& grid,
                       const NormOptions& options) {
  if (grid.empty()) {
    throw std::invalid_argument("error_norms: empty grid");
  }
  const Function& g = f;
  const int bits = options.bits > 0 ? options.bits : ext.evaluation_bits();
  const Extension e = ext.rounded(bits);
  ErrorNorms out;
  out.sup = sup_error(g, e, grid);

  mp::CompositeOptions q = options.quadrature;
  q.base_panels = std::max(q.base_panels, ext.n());
  const mp::QuadratureRule rule = mp::composite_rule(MpReal(-1L, bits), MpReal(1L, bits), g.singular_points, q, bits, g.breakpoints);
  const MpReal sq = mp::integrate(rule, mp::RealIntegrand([&](const MpReal& x) { return norm(g(x) - e.evaluate(x)); }));
  out.l2 = mp::sqrt(sq).to_double();
  return out;
}

}  // namespace fextlab
