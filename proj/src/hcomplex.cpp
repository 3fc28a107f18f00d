#include "pochzeta/hcomplex.hpp"

#include <ostream>
#include <string>

#include "pochzeta/errors.hpp"

namespace pochzeta {

HComplex& HComplex::operator*=(const HComplex& o) {
  HReal r = re * o.re - im * o.im;
  HReal i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

HComplex& HComplex::operator/=(const HComplex& o) {
  if (o.im.is_zero()) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  // Smith's algorithm keeps the intermediate magnitudes bounded.
  if (abs(o.re) >= abs(o.im)) {
    const HReal ratio = o.im / o.re;
    const HReal den = o.re + o.im * ratio;
    HReal r = (re + im * ratio) / den;
    HReal i = (im - re * ratio) / den;
    re = std::move(r);
    im = std::move(i);
  } else {
    const HReal ratio = o.re / o.im;
    const HReal den = o.re * ratio + o.im;
    HReal r = (re * ratio + im) / den;
    HReal i = (im * ratio - re) / den;
    re = std::move(r);
    im = std::move(i);
  }
  return *this;
}

HComplex operator/(const HReal& a, const HComplex& b) {
  HComplex num(a);
  return num /= b;
}

HComplex operator/(long a, const HComplex& b) {
  HComplex num(HReal(a, b.precision()));
  return num /= b;
}

std::string HComplex::to_string(int digits) const { return re.to_string(digits) + "," + im.to_string(digits); }

HComplex HComplex::parse(std::string_view text, Bits bits) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty complex literal", 0);
  if (s.back() != 'i' && s.back() != 'j') return HComplex(HReal::parse(s, bits));

  s.pop_back();
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string real_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string imag_part = split == std::string::npos ? s : s.substr(split);
  if (imag_part.empty() || imag_part == "+") imag_part = "1";
  if (imag_part == "-") imag_part = "-1";
  HComplex z(bits);
  if (!real_part.empty()) z.re = HReal::parse(real_part, bits);
  z.im = HReal::parse(imag_part, bits);
  return z;
}

HComplex conj(const HComplex& z) { return {z.re, -z.im}; }

HReal abs(const HComplex& z) { return hypot(z.re, z.im); }

HReal norm(const HComplex& z) { return z.re * z.re + z.im * z.im; }

HReal arg(const HComplex& z) { return atan2(z.im, z.re); }

HComplex exp(const HComplex& z) {
  const HReal m = exp(z.re);
  if (z.im.is_zero()) return HComplex(m);
  HReal s, c;
  sin_cos(z.im, s, c);
  return {m * c, m * s};
}

HComplex log(const HComplex& z) {
  if (z.im.is_zero() && z.re.sign() > 0) return HComplex(log(z.re));
  return {log(abs(z)), arg(z)};
}

HComplex sqrt(const HComplex& z) {
  if (z.is_zero()) return z;
  const HReal half(0.5, z.precision());
  return exp(log(z) * half);
}

HComplex sin(const HComplex& z) {
  HReal s, c;
  sin_cos(z.re, s, c);
  if (z.im.is_zero()) return HComplex(s);
  return {s * cosh(z.im), c * sinh(z.im)};
}

HComplex pow(const HComplex& z, const HComplex& w) {
  if (z.is_zero()) {
    if (w.re.sign() > 0) return HComplex(z.precision());
    throw DomainError("0^w with Re(w) <= 0");
  }
  return exp(w * log(z));
}

HComplex pow(const HReal& base, const HComplex& w) { return exp_times(w, log(base)); }

HComplex exp_times(const HComplex& w, const HReal& log_base) {
  const HReal m = exp(w.re * log_base);
  if (w.im.is_zero()) return HComplex(m);
  HReal s, c;
  sin_cos(w.im * log_base, s, c);
  return {m * c, m * s};
}

HComplex times_i(const HComplex& z) { return {-z.im, z.re}; }

std::ostream& operator<<(std::ostream& os, const HComplex& z) {
  const auto p = os.precision();
  const int d = p > 0 ? static_cast<int>(p) : 17;
  return os << '(' << z.re.to_string(d) << (z.im.sign() < 0 ? " - " : " + ") << abs(z.im).to_string(d) << "i)";
}

}  // namespace pochzeta
