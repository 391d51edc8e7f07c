#include "fextlab/mpcore/mpcomplex.hpp"

#include <ostream>

namespace fextlab::mp {

MpComplex MpComplex::unit(const MpReal& theta) {
  MpComplex z;
  sin_cos(theta, z.im, z.re);
  return z;
}

MpComplex& MpComplex::operator+=(const MpComplex& z) {
  re += z.re;
  im += z.im;
  return *this;
}

MpComplex& MpComplex::operator-=(const MpComplex& z) {
  re -= z.re;
  im -= z.im;
  return *this;
}

MpComplex& MpComplex::operator*=(const MpComplex& z) {
  MpReal new_re = re * z.re;
  new_re.sub_product(im, z.im);
  MpReal new_im = re * z.im;
  new_im.add_product(im, z.re);
  re = std::move(new_re);
  im = std::move(new_im);
  return *this;
}

MpComplex& MpComplex::operator*=(const MpReal& s) {
  re *= s;
  im *= s;
  return *this;
}

MpComplex& MpComplex::operator/=(const MpReal& s) {
  re /= s;
  im /= s;
  return *this;
}

MpComplex& MpComplex::add_product(const MpComplex& a, const MpComplex& b) {
  re.add_product(a.re, b.re);
  re.sub_product(a.im, b.im);
  im.add_product(a.re, b.im);
  im.add_product(a.im, b.re);
  return *this;
}

MpComplex& MpComplex::add_product(const MpComplex& a, const MpReal& s) {
  re.add_product(a.re, s);
  im.add_product(a.im, s);
  return *this;
}

MpComplex operator+(const MpComplex& a, const MpComplex& b) { return {a.re + b.re, a.im + b.im}; }
MpComplex operator-(const MpComplex& a, const MpComplex& b) { return {a.re - b.re, a.im - b.im}; }

MpComplex operator*(const MpComplex& a, const MpComplex& b) {
  MpComplex r(a);
  r *= b;
  return r;
}

MpComplex operator/(const MpComplex& a, const MpComplex& b) {
  const MpReal d = norm(b);
  MpReal re = a.re * b.re;
  re.add_product(a.im, b.im);
  MpReal im = a.im * b.re;
  im.sub_product(a.re, b.im);
  return {re / d, im / d};
}

MpComplex operator*(const MpComplex& a, const MpReal& s) { return {a.re * s, a.im * s}; }
MpComplex operator*(const MpReal& s, const MpComplex& a) { return a * s; }
MpComplex operator/(const MpComplex& a, const MpReal& s) { return {a.re / s, a.im / s}; }
MpComplex operator*(const MpComplex& a, double s) { return {a.re * s, a.im * s}; }

MpComplex conj(const MpComplex& z) { return {z.re, -z.im}; }

MpReal norm(const MpComplex& z) {
  MpReal r = z.re * z.re;
  r.add_product(z.im, z.im);
  return r;
}

MpReal abs(const MpComplex& z) { return hypot(z.re, z.im); }
MpReal arg(const MpComplex& z) { return atan2(z.im, z.re); }

MpComplex exp(const MpComplex& z) {
  const MpReal scale = exp(z.re);
  MpComplex u = MpComplex::unit(z.im);
  u *= scale;
  return u;
}

MpComplex sqrt(const MpComplex& z) {
  const int bits = z.precision();
  if (z.re.is_zero() && z.im.is_zero()) {
    return MpComplex::zero(bits);
  }
  // sqrt((|z| + |re|)/2) on the stable side, then im/(2 t) for the other part.
  const MpReal r = abs(z);
  MpReal t = sqrt((r + abs(z.re)) / 2.0);
  if (z.re.sign() >= 0) {
    return {t, z.im / (2.0 * t)};
  }
  MpReal im = z.im.sign() >= 0 ? t : -t;
  return {abs(z.im) / (2.0 * t), im};
}

std::ostream& operator<<(std::ostream& os, const MpComplex& z) {
  return os << '(' << z.re << (z.im.sign() < 0 ? " - " : " + ") << abs(z.im) << "i)";
}

}  // namespace fextlab::mp
