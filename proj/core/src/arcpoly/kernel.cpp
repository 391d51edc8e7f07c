#include "fextlab/arcpoly/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fextlab::arc {

using mp::MpComplex;
using mp::MpReal;

namespace {

void check_degree(const ArcPolyBasis& basis, int N) {
  if (N < 1 || N % 2 == 0) {
    throw std::invalid_argument("kernel dimension N must be odd and positive");
  }
  if (N > basis.max_degree()) {
    throw std::invalid_argument("kernel needs a basis of degree >= N");
  }
}

}  // namespace

MpReal kernel_direct_sum(const MpReal& x, const MpReal& y, const ArcPolyBasis& basis, int N) {
  check_degree(basis, N);
  const int bits = std::max({x.precision(), y.precision(), basis.precision()});
  const MpReal w = MpReal::pi(bits) / basis.T();
  const MpComplex z = MpComplex::unit(w * x.rounded(bits));
  const MpComplex zeta = MpComplex::unit(w * y.rounded(bits));
  MpComplex sum = MpComplex::zero(bits);
  for (int k = 0; k < N; ++k) {
    sum.add_product(conj(basis.evaluate(k, zeta)), basis.evaluate(k, z));
  }
  const int n = (N - 1) / 2;
  const MpComplex phase = MpComplex::unit(w * (y.rounded(bits) - x) * static_cast<double>(n));
  return (phase * sum).re;
}

KernelEval cd_kernel(const MpReal& x, const MpReal& y, const ArcPolyBasis& basis, int N) {
  check_degree(basis, N);
  const int bits = std::max({x.precision(), y.precision(), basis.precision()});
  KernelEval out{x, y, N, MpReal(0L, bits), false};
  const MpReal diff = x.rounded(bits) - y;
  if (abs(diff) < kKernelSwitch) {
    out.value = kernel_direct_sum(x, y, basis, N);
    return out;
  }
  const MpReal w = MpReal::pi(bits) / basis.T();
  auto scaled = [&](const MpReal& t) {
    const MpComplex z = MpComplex::unit(w * t.rounded(bits));
    return MpComplex::unit(-(w * t.rounded(bits) * (N / 2.0))) * basis.evaluate(N, z);
  };
  const MpComplex prod = conj(scaled(y)) * scaled(x);
  out.value = prod.im / mp::sin(w * diff / 2.0);
  out.closed_form = true;
  return out;
}

MpReal kernel_diag(const MpReal& x, const ArcPolyBasis& basis, int N) {
  check_degree(basis, N);
  const int bits = std::max(x.precision(), basis.precision());
  const MpComplex z = MpComplex::unit(MpReal::pi(bits) * x.rounded(bits) / basis.T());
  MpReal sum(0L, bits);
  for (int k = 0; k < N; ++k) {
    sum += norm(basis.evaluate(k, z));
  }
  return sum;
}

KernelEvaluator::KernelEvaluator(const ArcRecurrence& rec, int N) : rec_(&rec), N_(N) {
  if (N < 1 || N % 2 == 0 || N > rec.max_degree()) {
    throw std::invalid_argument("KernelEvaluator: N must be odd and within the recurrence degree");
  }
}

cd KernelEvaluator::scaled_top(double x) const {
  const double w = std::numbers::pi / rec_->T();
  return std::polar(1.0, -w * x * N_ / 2.0) * rec_->evaluate(std::polar(1.0, w * x), N_).first;
}

double KernelEvaluator::from_scaled(double x, cd ax, double y, cd ay) const {
  if (std::abs(x - y) < kKernelSwitch) {
    return direct(x, y);
  }
  const double w = std::numbers::pi / rec_->T();
  return (std::conj(ay) * ax).imag() / std::sin(w * (x - y) / 2.0);
}

double KernelEvaluator::operator()(double x, double y) const {
  if (std::abs(x - y) < kKernelSwitch) {
    return direct(x, y);
  }
  return from_scaled(x, scaled_top(x), y, scaled_top(y));
}

double KernelEvaluator::direct(double x, double y) const {
  const double w = std::numbers::pi / rec_->T();
  const auto px = rec_->evaluate_all(std::polar(1.0, w * x), N_ - 1);
  const auto py = rec_->evaluate_all(std::polar(1.0, w * y), N_ - 1);
  cd sum(0.0, 0.0);
  for (int k = 0; k < N_; ++k) {
    sum += std::conj(py[static_cast<std::size_t>(k)]) * px[static_cast<std::size_t>(k)];
  }
  const int n = (N_ - 1) / 2;
  return (std::polar(1.0, w * n * (y - x)) * sum).real();
}

double KernelEvaluator::diag(double x) const { return direct(x, x); }

}  // namespace fextlab::arc
