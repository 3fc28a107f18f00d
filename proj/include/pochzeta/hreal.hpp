#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pochzeta {

/// Binary precision in bits.
using Bits = std::int64_t;

namespace detail {
/// Widens the MPFR exponent range of the calling thread once. Gamma values
/// at k ~ 1e13 overflow the default range.
void ensure_wide_exponent_range();
}  // namespace detail

/// Arbitrary-precision real number backed by an mpfr_t.
///
/// Every value carries its own precision. Binary operations produce a result
/// at the larger of the two operand precisions; all rounding is to nearest.
class HReal {
 public:
  HReal() : HReal(Bits{64}) {}
  explicit HReal(Bits bits) {
    detail::ensure_wide_exponent_range();
    mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_zero(v_, 1);
  }
  HReal(double v, Bits bits) : HReal(bits) { mpfr_set_d(v_, v, MPFR_RNDN); }
  template <std::signed_integral I>
  HReal(I v, Bits bits) : HReal(bits) {
    mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
  }
  template <std::unsigned_integral I>
  HReal(I v, Bits bits) : HReal(bits) {
    mpfr_set_ui(v_, static_cast<unsigned long>(v), MPFR_RNDN);
  }
  HReal(const mpz_class& v, Bits bits) : HReal(bits) { mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN); }

  HReal(const HReal& o) : HReal(static_cast<Bits>(mpfr_get_prec(o.v_))) {
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  HReal(HReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  /// Copy of `o` rounded to `bits`.
  HReal(const HReal& o, Bits bits) : HReal(bits) { mpfr_set(v_, o.v_, MPFR_RNDN); }

  HReal& operator=(const HReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  HReal& operator=(HReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~HReal() { mpfr_clear(v_); }

  /// Parses a decimal literal. Throws ParseError on malformed input.
  static HReal parse(std::string_view text, Bits bits);

  static HReal pi(Bits bits);
  static HReal ln2(Bits bits);
  static HReal euler_gamma(Bits bits);
  static HReal nan(Bits bits);

  Bits precision() const noexcept { return static_cast<Bits>(mpfr_get_prec(v_)); }
  HReal rounded(Bits bits) const { return HReal(*this, bits); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits, C locale.
  std::string to_string(int digits) const;
  /// Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const noexcept { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  bool is_integer() const noexcept { return mpfr_integer_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1. Meaningless for zero.
  long exponent() const noexcept { return static_cast<long>(mpfr_get_exp(v_)); }

  HReal& operator+=(const HReal& o);
  HReal& operator-=(const HReal& o);
  HReal& operator*=(const HReal& o);
  HReal& operator/=(const HReal& o);
  HReal& operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  HReal& operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  HReal& operator+=(long o) {
    mpfr_add_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  HReal& operator-=(long o) {
    mpfr_sub_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  HReal& operator+=(double) = delete;
  HReal& operator-=(double) = delete;
  HReal& operator*=(double) = delete;
  HReal& operator/=(double) = delete;

  friend HReal operator-(const HReal& a) {
    HReal r(a);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

namespace detail {
inline Bits max_bits(const HReal& a, const HReal& b) {
  return a.precision() > b.precision() ? a.precision() : b.precision();
}
}  // namespace detail

inline HReal operator+(const HReal& a, const HReal& b) {
  HReal r(detail::max_bits(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline HReal operator-(const HReal& a, const HReal& b) {
  HReal r(detail::max_bits(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline HReal operator*(const HReal& a, const HReal& b) {
  HReal r(detail::max_bits(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline HReal operator/(const HReal& a, const HReal& b) {
  HReal r(detail::max_bits(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

inline HReal& HReal::operator+=(const HReal& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
inline HReal& HReal::operator-=(const HReal& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
inline HReal& HReal::operator*=(const HReal& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
inline HReal& HReal::operator/=(const HReal& o) {
  if (o.precision() > precision()) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

// Mixed arithmetic with machine integers keeps the HReal's precision.
inline HReal operator+(HReal a, long b) { return a += b; }
inline HReal operator+(long b, HReal a) { return a += b; }
inline HReal operator-(HReal a, long b) { return a -= b; }
inline HReal operator-(long b, const HReal& a) {
  HReal r(a.precision());
  mpfr_si_sub(r.get(), b, a.get(), MPFR_RNDN);
  return r;
}
inline HReal operator*(HReal a, long b) { return a *= b; }
inline HReal operator*(long b, HReal a) { return a *= b; }
inline HReal operator/(HReal a, long b) { return a /= b; }
inline HReal operator/(long b, const HReal& a) {
  HReal r(a.precision());
  mpfr_si_div(r.get(), b, a.get(), MPFR_RNDN);
  return r;
}

// A double would silently truncate through the long overloads above.
HReal operator+(const HReal&, double) = delete;
HReal operator+(double, const HReal&) = delete;
HReal operator-(const HReal&, double) = delete;
HReal operator-(double, const HReal&) = delete;
HReal operator*(const HReal&, double) = delete;
HReal operator*(double, const HReal&) = delete;
HReal operator/(const HReal&, double) = delete;
HReal operator/(double, const HReal&) = delete;
bool operator==(const HReal&, double) = delete;

inline bool operator==(const HReal& a, const HReal& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
inline std::partial_ordering operator<=>(const HReal& a, const HReal& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}
inline bool operator==(const HReal& a, long b) { return !a.is_nan() && mpfr_cmp_si(a.get(), b) == 0; }
inline std::partial_ordering operator<=>(const HReal& a, long b) {
  if (a.is_nan()) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.get(), b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}
inline std::partial_ordering operator<=>(const HReal& a, double b) {
  if (a.is_nan() || b != b) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.get(), b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

HReal abs(const HReal& x);
HReal sqrt(const HReal& x);
HReal exp(const HReal& x);
HReal expm1(const HReal& x);
HReal log(const HReal& x);
HReal log1p(const HReal& x);
HReal pow(const HReal& base, const HReal& exponent);
HReal pow(const HReal& base, long exponent);
HReal sin(const HReal& x);
HReal cos(const HReal& x);
void sin_cos(const HReal& x, HReal& s, HReal& c);
HReal sinh(const HReal& x);
HReal cosh(const HReal& x);
HReal atan2(const HReal& y, const HReal& x);
HReal hypot(const HReal& x, const HReal& y);
HReal floor(const HReal& x);
HReal round(const HReal& x);
HReal max(const HReal& a, const HReal& b);
HReal min(const HReal& a, const HReal& b);
/// ln(n) for a positive machine integer, at `bits`.
HReal log_of(unsigned long n, Bits bits);
/// 10^(-digits) at `bits`.
HReal ten_to_minus(long digits, Bits bits);

std::ostream& operator<<(std::ostream& os, const HReal& x);

}  // namespace pochzeta
