#include "fextlab/arcpoly/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fextlab::arc {

using mp::MpComplex;
using mp::MpReal;

MpReal moments(double T, int j, int bits) {
  return 2.0 * mp::sinc(MpReal::pi(bits) * static_cast<double>(j) / T);
}

MpComplex Polynomial::operator()(const MpComplex& z) const {
  if (coeffs.empty()) {
    return MpComplex::zero(z.precision());
  }
  MpComplex acc = coeffs.back();
  for (std::size_t j = coeffs.size() - 1; j-- > 0;) {
    acc *= z;
    acc += coeffs[j];
  }
  return acc;
}

Polynomial reflected(const Polynomial& p) {
  Polynomial r;
  r.coeffs.reserve(p.coeffs.size());
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    r.coeffs.push_back(conj(*it));
  }
  return r;
}

ArcPolyBasis ArcPolyBasis::build(double T, int max_degree, int bits) {
  if (max_degree < 0) {
    throw std::invalid_argument("max_degree must be nonnegative");
  }
  if (!(T >= 1.0)) {
    throw std::invalid_argument("arc basis needs T >= 1");
  }
  const int size = max_degree + 1;
  mp::MpVector row;
  row.reserve(static_cast<std::size_t>(size));
  for (int j = 0; j < size; ++j) {
    row.push_back(moments(T, j, bits));
  }
  const mp::MpMatrix L = mp::cholesky(mp::HermitianToeplitz(std::move(row)));

  ArcPolyBasis basis;
  basis.T_ = T;
  basis.M_ = max_degree;
  basis.coeffs_ = mp::invert_lower(L);
  for (int k = 0; k < max_degree; ++k) {
    const auto next = static_cast<std::size_t>(k + 1);
    basis.alpha_.push_back(-basis.coeffs_(next, 0) / basis.coeffs_(next, next));
  }
  return basis;
}

const MpReal& ArcPolyBasis::leading(int k) const {
  if (k < 0 || k > M_) {
    throw std::out_of_range("degree " + std::to_string(k) + " outside basis");
  }
  return coeffs_(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
}

Polynomial ArcPolyBasis::polynomial(int k) const {
  leading(k);
  Polynomial p;
  for (int j = 0; j <= k; ++j) {
    p.coeffs.emplace_back(coeffs_(static_cast<std::size_t>(k), static_cast<std::size_t>(j)));
  }
  return p;
}

MpComplex ArcPolyBasis::evaluate(int k, const MpComplex& z) const {
  leading(k);
  const auto row = static_cast<std::size_t>(k);
  MpComplex acc(coeffs_(row, row));
  for (std::size_t j = row; j-- > 0;) {
    acc *= z;
    acc.re += coeffs_(row, j);
  }
  return acc;
}

MpComplex ArcPolyBasis::evaluate_reflected(int k, const MpComplex& z) const {
  leading(k);
  const auto row = static_cast<std::size_t>(k);
  // Real coefficients: Pi*_k(z) = sum_j c_{k, k-j} z^j.
  MpComplex acc(coeffs_(row, 0));
  for (std::size_t j = 1; j <= row; ++j) {
    acc *= z;
    acc.re += coeffs_(row, j);
  }
  return acc;
}

mp::CVector ArcPolyBasis::evaluate_all(const MpComplex& z, int N) const {
  if (N < 0 || N > M_) {
    throw std::out_of_range("evaluate_all: degree outside basis");
  }
  const int bits = std::max(z.precision(), precision());
  mp::CVector out;
  out.reserve(static_cast<std::size_t>(N + 1));
  MpComplex p(coeffs_(0, 0).rounded(bits));
  MpComplex ps = p;
  out.push_back(p);
  for (int k = 0; k < N; ++k) {
    const MpReal& a = alpha_[static_cast<std::size_t>(k)];
    const MpReal rho = mp::sqrt(1.0 - a * a);
    const MpComplex zp = z * p;
    MpComplex next = (zp - ps * a) / rho;
    MpComplex next_s = (ps - zp * a) / rho;
    p = std::move(next);
    ps = std::move(next_s);
    out.push_back(p);
  }
  return out;
}

MpComplex ArcPolyBasis::on_arc(int k, const MpReal& x) const {
  const int bits = std::max(x.precision(), precision());
  return evaluate(k, MpComplex::unit(MpReal::pi(bits) * x.rounded(bits) / T_));
}

ArcRecurrence::ArcRecurrence(const ArcPolyBasis& basis) : T_(basis.T()) {
  for (const auto& a : basis.verblunsky()) {
    const double ad = a.to_double();
    alpha_.push_back(ad);
    rho_.push_back(mp::sqrt(1.0 - a * a).to_double());
  }
}

std::pair<cd, cd> ArcRecurrence::evaluate(cd z, int N) const {
  if (N < 0 || N > max_degree()) {
    throw std::out_of_range("ArcRecurrence: degree outside range");
  }
  cd p(1.0 / std::numbers::sqrt2, 0.0);
  cd ps = p;
  for (int k = 0; k < N; ++k) {
    const double a = alpha_[static_cast<std::size_t>(k)];
    const double r = rho_[static_cast<std::size_t>(k)];
    const cd zp = z * p;
    const cd next = (zp - a * ps) / r;
    ps = (ps - a * zp) / r;
    p = next;
  }
  return {p, ps};
}

std::vector<cd> ArcRecurrence::evaluate_all(cd z, int N) const {
  if (N < 0 || N > max_degree()) {
    throw std::out_of_range("ArcRecurrence: degree outside range");
  }
  std::vector<cd> out;
  out.reserve(static_cast<std::size_t>(N + 1));
  cd p(1.0 / std::numbers::sqrt2, 0.0);
  cd ps = p;
  out.push_back(p);
  for (int k = 0; k < N; ++k) {
    const double a = alpha_[static_cast<std::size_t>(k)];
    const double r = rho_[static_cast<std::size_t>(k)];
    const cd zp = z * p;
    const cd next = (zp - a * ps) / r;
    ps = (ps - a * zp) / r;
    p = next;
    out.push_back(p);
  }
  return out;
}

cd ArcRecurrence::on_arc(int N, double x) const {
  return evaluate(std::polar(1.0, std::numbers::pi * x / T_), N).first;
}

}  // namespace fextlab::arc
