#include "fextlab/mpcore/mpreal.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace fextlab::mp {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

int max_prec(const MpReal& a, const MpReal& b) { return std::max(a.precision(), b.precision()); }

template <typename Op>
MpReal unary(const MpReal& x, Op op) {
  MpReal r(0L, x.precision());
  op(r.get(), x.get(), kRnd);
  return r;
}

}  // namespace

int checked_precision(int bits) {
  if (bits < kMinPrecision) {
    throw std::invalid_argument("precision_bits must be >= 64, got " + std::to_string(bits));
  }
  if (bits > (1 << 24)) {
    throw std::invalid_argument("precision_bits unreasonably large: " + std::to_string(bits));
  }
  return bits;
}

MpReal::MpReal() {
  mpfr_init2(value_, kMinPrecision);
  mpfr_set_zero(value_, 1);
}

MpReal::MpReal(double value, int bits) {
  mpfr_init2(value_, checked_precision(bits));
  mpfr_set_d(value_, value, kRnd);
}

MpReal::MpReal(long value, int bits) {
  mpfr_init2(value_, checked_precision(bits));
  mpfr_set_si(value_, value, kRnd);
}

MpReal::MpReal(const MpReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
}

MpReal::MpReal(MpReal&& other) noexcept {
  mpfr_init2(value_, kMinPrecision);
  mpfr_swap(value_, other.value_);
}

MpReal& MpReal::operator=(const MpReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

MpReal& MpReal::operator=(MpReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

MpReal::~MpReal() { mpfr_clear(value_); }

MpReal MpReal::from_string(std::string_view text, int bits) {
  MpReal r(0L, bits);
  const std::string s(text);
  if (mpfr_set_str(r.value_, s.c_str(), 10, kRnd) != 0) {
    // mpfr_set_str returns nonzero only when the whole string is not a number
    throw std::invalid_argument("not a number: " + s);
  }
  return r;
}

MpReal MpReal::pi(int bits) {
  MpReal r(0L, bits);
  mpfr_const_pi(r.value_, kRnd);
  return r;
}

MpReal MpReal::pow2(long exponent, int bits) {
  MpReal r(1L, bits);
  mpfr_mul_2si(r.value_, r.value_, exponent, kRnd);
  return r;
}

MpReal MpReal::rounded(int bits) const {
  MpReal r(0L, bits);
  mpfr_set(r.value_, value_, kRnd);
  return r;
}

std::string MpReal::to_string(int digits) const {
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(std::max(1, digits)) + "Rg";
  if (mpfr_asprintf(&buf, fmt.c_str(), value_) < 0) {
    return "nan";
  }
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

long MpReal::exponent() const noexcept {
  if (mpfr_zero_p(value_) || !mpfr_number_p(value_)) {
    return -(1L << 40);
  }
  return mpfr_get_exp(value_);
}

void MpReal::raise_precision(int bits) {
  if (bits > precision()) {
    mpfr_prec_round(value_, bits, kRnd);
  }
}

MpReal& MpReal::operator+=(const MpReal& rhs) {
  raise_precision(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, kRnd);
  return *this;
}

MpReal& MpReal::operator-=(const MpReal& rhs) {
  raise_precision(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, kRnd);
  return *this;
}

MpReal& MpReal::operator*=(const MpReal& rhs) {
  raise_precision(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, kRnd);
  return *this;
}

MpReal& MpReal::operator/=(const MpReal& rhs) {
  raise_precision(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, kRnd);
  return *this;
}

MpReal& MpReal::operator+=(double rhs) {
  mpfr_add_d(value_, value_, rhs, kRnd);
  return *this;
}

MpReal& MpReal::operator-=(double rhs) {
  mpfr_sub_d(value_, value_, rhs, kRnd);
  return *this;
}

MpReal& MpReal::operator*=(double rhs) {
  mpfr_mul_d(value_, value_, rhs, kRnd);
  return *this;
}

MpReal& MpReal::operator/=(double rhs) {
  mpfr_div_d(value_, value_, rhs, kRnd);
  return *this;
}

MpReal MpReal::operator-() const {
  MpReal r(*this);
  mpfr_neg(r.value_, r.value_, kRnd);
  return r;
}

MpReal& MpReal::add_product(const MpReal& a, const MpReal& b) {
  raise_precision(std::max(a.precision(), b.precision()));
  mpfr_fma(value_, a.value_, b.value_, value_, kRnd);
  return *this;
}

MpReal& MpReal::sub_product(const MpReal& a, const MpReal& b) {
  raise_precision(std::max(a.precision(), b.precision()));
  // value - a*b == -(a*b - value)
  mpfr_fms(value_, a.value_, b.value_, value_, kRnd);
  mpfr_neg(value_, value_, kRnd);
  return *this;
}

MpReal operator+(const MpReal& a, const MpReal& b) {
  MpReal r(0L, max_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), kRnd);
  return r;
}

MpReal operator-(const MpReal& a, const MpReal& b) {
  MpReal r(0L, max_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), kRnd);
  return r;
}

MpReal operator*(const MpReal& a, const MpReal& b) {
  MpReal r(0L, max_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), kRnd);
  return r;
}

MpReal operator/(const MpReal& a, const MpReal& b) {
  MpReal r(0L, max_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), kRnd);
  return r;
}

MpReal operator+(const MpReal& a, double b) {
  MpReal r(0L, a.precision());
  mpfr_add_d(r.get(), a.get(), b, kRnd);
  return r;
}

MpReal operator-(const MpReal& a, double b) {
  MpReal r(0L, a.precision());
  mpfr_sub_d(r.get(), a.get(), b, kRnd);
  return r;
}

MpReal operator*(const MpReal& a, double b) {
  MpReal r(0L, a.precision());
  mpfr_mul_d(r.get(), a.get(), b, kRnd);
  return r;
}

MpReal operator/(const MpReal& a, double b) {
  MpReal r(0L, a.precision());
  mpfr_div_d(r.get(), a.get(), b, kRnd);
  return r;
}

MpReal operator+(double a, const MpReal& b) { return b + a; }

MpReal operator-(double a, const MpReal& b) {
  MpReal r(0L, b.precision());
  mpfr_d_sub(r.get(), a, b.get(), kRnd);
  return r;
}

MpReal operator*(double a, const MpReal& b) { return b * a; }

MpReal operator/(double a, const MpReal& b) {
  MpReal r(0L, b.precision());
  mpfr_d_div(r.get(), a, b.get(), kRnd);
  return r;
}

bool operator==(const MpReal& a, const MpReal& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

std::partial_ordering operator<=>(const MpReal& a, const MpReal& b) {
  if (mpfr_unordered_p(a.get(), b.get())) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const MpReal& a, double b) { return mpfr_cmp_d(a.get(), b) == 0; }

std::partial_ordering operator<=>(const MpReal& a, double b) {
  if (mpfr_nan_p(a.get()) || b != b) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp_d(a.get(), b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const MpReal& x) {
  const auto digits = os.precision() > 0 ? static_cast<int>(os.precision()) : 20;
  return os << x.to_string(digits);
}

MpReal abs(const MpReal& x) { return unary(x, mpfr_abs); }
MpReal sqrt(const MpReal& x) { return unary(x, mpfr_sqrt); }
MpReal exp(const MpReal& x) { return unary(x, mpfr_exp); }
MpReal log(const MpReal& x) { return unary(x, mpfr_log); }
MpReal sin(const MpReal& x) { return unary(x, mpfr_sin); }
MpReal cos(const MpReal& x) { return unary(x, mpfr_cos); }
MpReal tan(const MpReal& x) { return unary(x, mpfr_tan); }
MpReal asin(const MpReal& x) { return unary(x, mpfr_asin); }
MpReal acos(const MpReal& x) { return unary(x, mpfr_acos); }
MpReal atan(const MpReal& x) { return unary(x, mpfr_atan); }
MpReal sinh(const MpReal& x) { return unary(x, mpfr_sinh); }
MpReal cosh(const MpReal& x) { return unary(x, mpfr_cosh); }
MpReal acosh(const MpReal& x) { return unary(x, mpfr_acosh); }

MpReal floor(const MpReal& x) {
  MpReal r(0L, x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

MpReal atan2(const MpReal& y, const MpReal& x) {
  MpReal r(0L, max_prec(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

MpReal pow(const MpReal& x, const MpReal& y) {
  MpReal r(0L, max_prec(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), kRnd);
  return r;
}

MpReal pow(const MpReal& x, double y) { return pow(x, MpReal(y, x.precision())); }

MpReal pow(const MpReal& x, long n) {
  MpReal r(0L, x.precision());
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  return r;
}

MpReal hypot(const MpReal& x, const MpReal& y) {
  MpReal r(0L, max_prec(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), kRnd);
  return r;
}

MpReal min(const MpReal& a, const MpReal& b) { return (b < a) ? b : a; }
MpReal max(const MpReal& a, const MpReal& b) { return (a < b) ? b : a; }

MpReal sinc(const MpReal& x) {
  if (x.is_zero()) {
    return MpReal(1L, x.precision());
  }
  return sin(x) / x;
}

void sin_cos(const MpReal& x, MpReal& s, MpReal& c) {
  s = MpReal(0L, x.precision());
  c = MpReal(0L, x.precision());
  mpfr_sin_cos(s.get(), c.get(), x.get(), kRnd);
}

MpReal epsilon(int bits) { return MpReal::pow2(-static_cast<long>(bits), std::max(bits, kMinPrecision)); }

}  // namespace fextlab::mp
