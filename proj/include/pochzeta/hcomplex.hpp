#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "pochzeta/hreal.hpp"

namespace pochzeta {

/// Arbitrary-precision complex number s = re + i im.
struct HComplex {
  HReal re;
  HReal im;

  HComplex() = default;
  explicit HComplex(Bits bits) : re(bits), im(bits) {}
  HComplex(HReal real, HReal imag) : re(std::move(real)), im(std::move(imag)) {}
  /// Real value with zero imaginary part at the same precision.
  explicit HComplex(const HReal& real) : re(real), im(real.precision()) {}
  HComplex(std::complex<double> z, Bits bits) : re(z.real(), bits), im(z.imag(), bits) {}
  HComplex(const HComplex& z, Bits bits) : re(z.re, bits), im(z.im, bits) {}

  Bits precision() const noexcept { return re.precision() > im.precision() ? re.precision() : im.precision(); }
  HComplex rounded(Bits bits) const { return HComplex(*this, bits); }

  bool is_real() const noexcept { return im.is_zero(); }
  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }
  bool is_finite() const noexcept { return re.is_finite() && im.is_finite(); }

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  /// "re,im" in scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;

  /// Parses "a", "a+bi", "a-bi", "bi", "i", "-i" (no spaces). Throws ParseError.
  static HComplex parse(std::string_view text, Bits bits);

  HComplex& operator+=(const HComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  HComplex& operator-=(const HComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  HComplex& operator*=(const HComplex& o);
  HComplex& operator/=(const HComplex& o);
  HComplex& operator*=(const HReal& o) {
    re *= o;
    im *= o;
    return *this;
  }
  HComplex& operator/=(const HReal& o) {
    re /= o;
    im /= o;
    return *this;
  }
  HComplex& operator*=(long o) {
    re *= o;
    im *= o;
    return *this;
  }
  HComplex& operator/=(long o) {
    re /= o;
    im /= o;
    return *this;
  }
  HComplex& operator*=(double) = delete;
  HComplex& operator/=(double) = delete;

  friend HComplex operator-(const HComplex& z) { return {-z.re, -z.im}; }
};

inline HComplex operator+(HComplex a, const HComplex& b) { return a += b; }
inline HComplex operator-(HComplex a, const HComplex& b) { return a -= b; }
inline HComplex operator*(HComplex a, const HComplex& b) { return a *= b; }
inline HComplex operator/(HComplex a, const HComplex& b) { return a /= b; }
inline HComplex operator+(HComplex a, const HReal& b) {
  a.re += b;
  return a;
}
inline HComplex operator-(HComplex a, const HReal& b) {
  a.re -= b;
  return a;
}
inline HComplex operator-(const HReal& a, const HComplex& b) { return {a - b.re, -b.im}; }
inline HComplex operator+(HComplex a, long b) {
  a.re += b;
  return a;
}
inline HComplex operator-(HComplex a, long b) {
  a.re -= b;
  return a;
}
inline HComplex operator-(long a, const HComplex& b) { return {a - b.re, -b.im}; }
inline HComplex operator*(HComplex a, const HReal& b) { return a *= b; }
inline HComplex operator*(const HReal& b, HComplex a) { return a *= b; }
inline HComplex operator/(HComplex a, const HReal& b) { return a /= b; }
inline HComplex operator*(HComplex a, long b) { return a *= b; }
inline HComplex operator/(HComplex a, long b) { return a /= b; }
HComplex operator/(const HReal& a, const HComplex& b);
HComplex operator/(long a, const HComplex& b);
// A double would silently truncate through the long overloads above.
HComplex operator+(const HComplex&, double) = delete;
HComplex operator-(const HComplex&, double) = delete;
HComplex operator-(double, const HComplex&) = delete;
HComplex operator*(const HComplex&, double) = delete;
HComplex operator/(const HComplex&, double) = delete;
HComplex operator/(double, const HComplex&) = delete;

inline bool operator==(const HComplex& a, const HComplex& b) { return a.re == b.re && a.im == b.im; }

HComplex conj(const HComplex& z);
HReal abs(const HComplex& z);
/// |z|^2
HReal norm(const HComplex& z);
HReal arg(const HComplex& z);
HComplex exp(const HComplex& z);
/// Principal branch.
HComplex log(const HComplex& z);
HComplex sqrt(const HComplex& z);
HComplex sin(const HComplex& z);
/// z^w = exp(w log z), principal branch.
HComplex pow(const HComplex& z, const HComplex& w);
/// base^w for a positive real base: exp(w ln base).
HComplex pow(const HReal& base, const HComplex& w);
/// exp(w * log_base) where log_base is a precomputed real logarithm.
HComplex exp_times(const HComplex& w, const HReal& log_base);
/// i * z
HComplex times_i(const HComplex& z);

std::ostream& operator<<(std::ostream& os, const HComplex& z);

}  // namespace pochzeta
