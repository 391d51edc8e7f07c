#pragma once

#include <algorithm>
#include <complex>
#include <iosfwd>

#include "fextlab/mpcore/mpreal.hpp"

namespace fextlab::mp {

/// Complex number stored as an explicit (re, im) pair of MpReal.
struct MpComplex {
  MpReal re;
  MpReal im;

  MpComplex() = default;
  MpComplex(MpReal real, MpReal imag) : re(std::move(real)), im(std::move(imag)) {}
  explicit MpComplex(MpReal real) : re(std::move(real)), im(0L, re.precision()) {}
  MpComplex(std::complex<double> z, int bits) : re(z.real(), bits), im(z.imag(), bits) {}

  static MpComplex zero(int bits) { return {MpReal(0L, bits), MpReal(0L, bits)}; }
  /// e^{i theta}
  static MpComplex unit(const MpReal& theta);

  int precision() const noexcept { return std::max(re.precision(), im.precision()); }
  MpComplex rounded(int bits) const { return {re.rounded(bits), im.rounded(bits)}; }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  MpComplex& operator+=(const MpComplex& z);
  MpComplex& operator-=(const MpComplex& z);
  MpComplex& operator*=(const MpComplex& z);
  MpComplex& operator*=(const MpReal& s);
  MpComplex& operator/=(const MpReal& s);
  MpComplex operator-() const { return {-re, -im}; }

  /// this += a * b
  MpComplex& add_product(const MpComplex& a, const MpComplex& b);
  /// this += a * s
  MpComplex& add_product(const MpComplex& a, const MpReal& s);
};

MpComplex operator+(const MpComplex& a, const MpComplex& b);
MpComplex operator-(const MpComplex& a, const MpComplex& b);
MpComplex operator*(const MpComplex& a, const MpComplex& b);
MpComplex operator/(const MpComplex& a, const MpComplex& b);
MpComplex operator*(const MpComplex& a, const MpReal& s);
MpComplex operator*(const MpReal& s, const MpComplex& a);
MpComplex operator/(const MpComplex& a, const MpReal& s);
MpComplex operator*(const MpComplex& a, double s);

MpComplex conj(const MpComplex& z);
/// |z|^2
MpReal norm(const MpComplex& z);
MpReal abs(const MpComplex& z);
MpReal arg(const MpComplex& z);
MpComplex exp(const MpComplex& z);
/// Principal square root.
MpComplex sqrt(const MpComplex& z);

std::ostream& operator<<(std::ostream& os, const MpComplex& z);

}  // namespace fextlab::mp
