#include "pochzeta/hreal.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "pochzeta/errors.hpp"
#include "pochzeta/precision.hpp"

namespace pochzeta {

namespace detail {
void ensure_wide_exponent_range() {
  thread_local bool done = false;
  if (!done) {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
    done = true;
  }
}
}  // namespace detail

HReal HReal::parse(std::string_view text, Bits bits) {
  const std::string s(text);
  HReal r(bits);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.get(), s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0' || r.is_nan()) {
    throw ParseError("not a decimal number: '" + s + "'", 0);
  }
  return r;
}

HReal HReal::pi(Bits bits) {
  HReal r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

HReal HReal::ln2(Bits bits) {
  HReal r(bits);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

HReal HReal::euler_gamma(Bits bits) {
  HReal r(bits);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

HReal HReal::nan(Bits bits) {
  HReal r(bits);
  mpfr_set_nan(r.get());
  return r;
}

std::string HReal::to_string(int digits) const {
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string HReal::to_fixed(int decimals) const {
  if (decimals < 0) decimals = 0;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", decimals, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

namespace {
template <typename F>
HReal unary(const HReal& x, F f) {
  HReal r(x.precision());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace

HReal abs(const HReal& x) { return unary(x, mpfr_abs); }
HReal sqrt(const HReal& x) { return unary(x, mpfr_sqrt); }
HReal exp(const HReal& x) { return unary(x, mpfr_exp); }
HReal expm1(const HReal& x) { return unary(x, mpfr_expm1); }
HReal log(const HReal& x) { return unary(x, mpfr_log); }
HReal log1p(const HReal& x) { return unary(x, mpfr_log1p); }
HReal sin(const HReal& x) { return unary(x, mpfr_sin); }
HReal cos(const HReal& x) { return unary(x, mpfr_cos); }
HReal sinh(const HReal& x) { return unary(x, mpfr_sinh); }
HReal cosh(const HReal& x) { return unary(x, mpfr_cosh); }

HReal pow(const HReal& base, const HReal& exponent) {
  HReal r(detail::max_bits(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

HReal pow(const HReal& base, long exponent) {
  HReal r(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

void sin_cos(const HReal& x, HReal& s, HReal& c) {
  s = HReal(x.precision());
  c = HReal(x.precision());
  mpfr_sin_cos(s.get(), c.get(), x.get(), MPFR_RNDN);
}

HReal atan2(const HReal& y, const HReal& x) {
  HReal r(detail::max_bits(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

HReal hypot(const HReal& x, const HReal& y) {
  HReal r(detail::max_bits(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

HReal floor(const HReal& x) {
  HReal r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

HReal round(const HReal& x) {
  HReal r(x.precision());
  mpfr_round(r.get(), x.get());
  return r;
}

HReal max(const HReal& a, const HReal& b) { return a < b ? b : a; }
HReal min(const HReal& a, const HReal& b) { return b < a ? b : a; }

HReal log_of(unsigned long n, Bits bits) {
  HReal r(bits);
  mpfr_log_ui(r.get(), n, MPFR_RNDN);
  return r;
}

HReal ten_to_minus(long digits, Bits bits) {
  HReal r(bits);
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(digits < 0 ? -digits : digits), MPFR_RNDN);
  if (digits > 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const HReal& x) {
  const auto p = os.precision();
  return os << x.to_string(p > 0 ? static_cast<int>(p) : 17);
}

// PrecisionContext lives here too: it is tiny and only needs the bit conversion.

PrecisionContext::PrecisionContext(int target_digits, int guard_digits)
    : target_(target_digits), guard_(guard_digits) {
  if (target_digits < kMinTargetDigits) {
    throw DomainError("target_digits must be >= " + std::to_string(kMinTargetDigits));
  }
  if (guard_digits < 0) throw DomainError("guard_digits must be >= 0");
}

PrecisionContext PrecisionContext::with_guard(int guard_digits) const {
  return PrecisionContext(target_, guard_digits);
}

PrecisionContext PrecisionContext::for_binomial_order(long k) const {
  const int need = required_guard(k);
  return guard_ >= need ? *this : with_guard(need);
}

int PrecisionContext::required_guard(long k) noexcept {
  if (k < 0) k = 0;
  return static_cast<int>(std::ceil(0.302 * static_cast<double>(k))) + 10;
}

void PrecisionContext::check_binomial_order(long k) const {
  const int need = required_guard(k);
  if (guard_ < need) {
    throw PrecisionError("alternating binomial transform of order " + std::to_string(k) +
                         " needs at least " + std::to_string(need) + " guard digits, context has " +
                         std::to_string(guard_));
  }
}

std::int64_t PrecisionContext::digits_to_bits(int digits) noexcept {
  return static_cast<std::int64_t>(std::ceil(digits * 3.3219280948873623)) + 4;
}

}  // namespace pochzeta
