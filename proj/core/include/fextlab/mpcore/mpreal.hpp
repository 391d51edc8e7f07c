#pragma once

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fextlab::mp {

inline constexpr int kMinPrecision = 64;

/// Clamp a requested precision to the supported range.
int checked_precision(int bits);

/// Arbitrary precision real backed by MPFR.
///
/// Binary operations produce a result at the larger of the operand
/// precisions; operations with a plain double use the MpReal's precision.
class MpReal {
 public:
  MpReal();
  explicit MpReal(double value, int bits = kMinPrecision);
  MpReal(long value, int bits);
  MpReal(int value, int bits) : MpReal(static_cast<long>(value), bits) {}

  MpReal(const MpReal& other);
  MpReal(MpReal&& other) noexcept;
  MpReal& operator=(const MpReal& other);
  MpReal& operator=(MpReal&& other) noexcept;
  ~MpReal();

  static MpReal from_string(std::string_view text, int bits);
  static MpReal pi(int bits);
  static MpReal zero(int bits) { return MpReal(0L, bits); }
  static MpReal one(int bits) { return MpReal(1L, bits); }
  /// 2^exponent at the given precision.
  static MpReal pow2(long exponent, int bits);

  int precision() const noexcept { return static_cast<int>(mpfr_get_prec(value_)); }
  MpReal rounded(int bits) const;

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const noexcept { return mpfr_get_ld(value_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  /// Binary exponent e with |x| in [2^(e-1), 2^e); very negative for zero.
  long exponent() const noexcept;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  MpReal& operator+=(const MpReal& rhs);
  MpReal& operator-=(const MpReal& rhs);
  MpReal& operator*=(const MpReal& rhs);
  MpReal& operator/=(const MpReal& rhs);
  MpReal& operator+=(double rhs);
  MpReal& operator-=(double rhs);
  MpReal& operator*=(double rhs);
  MpReal& operator/=(double rhs);

  MpReal operator-() const;

  /// this += a * b, rounded once.
  MpReal& add_product(const MpReal& a, const MpReal& b);
  /// this -= a * b, rounded once.
  MpReal& sub_product(const MpReal& a, const MpReal& b);

 private:
  void raise_precision(int bits);
  mpfr_t value_;
};

MpReal operator+(const MpReal& a, const MpReal& b);
MpReal operator-(const MpReal& a, const MpReal& b);
MpReal operator*(const MpReal& a, const MpReal& b);
MpReal operator/(const MpReal& a, const MpReal& b);
MpReal operator+(const MpReal& a, double b);
MpReal operator-(const MpReal& a, double b);
MpReal operator*(const MpReal& a, double b);
MpReal operator/(const MpReal& a, double b);
MpReal operator+(double a, const MpReal& b);
MpReal operator-(double a, const MpReal& b);
MpReal operator*(double a, const MpReal& b);
MpReal operator/(double a, const MpReal& b);

bool operator==(const MpReal& a, const MpReal& b);
std::partial_ordering operator<=>(const MpReal& a, const MpReal& b);
bool operator==(const MpReal& a, double b);
std::partial_ordering operator<=>(const MpReal& a, double b);

std::ostream& operator<<(std::ostream& os, const MpReal& x);

MpReal abs(const MpReal& x);
MpReal sqrt(const MpReal& x);
MpReal exp(const MpReal& x);
MpReal log(const MpReal& x);
MpReal sin(const MpReal& x);
MpReal cos(const MpReal& x);
MpReal tan(const MpReal& x);
MpReal asin(const MpReal& x);
MpReal acos(const MpReal& x);
MpReal atan(const MpReal& x);
MpReal atan2(const MpReal& y, const MpReal& x);
MpReal sinh(const MpReal& x);
MpReal cosh(const MpReal& x);
MpReal acosh(const MpReal& x);
MpReal pow(const MpReal& x, const MpReal& y);
MpReal pow(const MpReal& x, double y);
MpReal pow(const MpReal& x, long n);
MpReal floor(const MpReal& x);
MpReal hypot(const MpReal& x, const MpReal& y);
MpReal min(const MpReal& a, const MpReal& b);
MpReal max(const MpReal& a, const MpReal& b);
/// sin(x)/x with the removable singularity filled in.
MpReal sinc(const MpReal& x);
/// Simultaneous sine and cosine (one MPFR call).
void sin_cos(const MpReal& x, MpReal& s, MpReal& c);

/// 2^-bits, the unit roundoff scale used in tolerance contracts.
MpReal epsilon(int bits);

}  // namespace fextlab::mp
