#include <algorithm>
#include <cmath>

#include "pochzeta/errors.hpp"
#include "pochzeta/special.hpp"
#include "special_tables.hpp"

namespace pochzeta {

namespace {

constexpr double kLn10 = 2.302585092994046;

bool is_gamma_pole(const HComplex& z) { return z.is_real() && z.re.is_integer() && !(z.re > 0L); }

long spouge_parameter(int digits) {
  return static_cast<long>(std::ceil(digits * kLn10 / std::log(2.0 * M_PI))) + 1;
}

// Extra digits so that ln Gamma(z), which is of size |z| ln |z|, keeps
// `digits` absolute digits.
int magnitude_digits(double z_abs) {
  return static_cast<int>(std::ceil(std::log10(2.0 + z_abs * (1.0 + std::log(2.0 + z_abs)))));
}

// ln Gamma(z) for Re(z) >= 1 by Spouge's formula on z - 1.
HComplex log_gamma_spouge(const HComplex& z, int digits) {
  const long a = spouge_parameter(digits);
  const int coef_digits = digits + static_cast<int>(std::ceil(a * std::log10(M_E))) + 5;
  const Bits coef_bits = PrecisionContext::digits_to_bits(coef_digits);
  const Bits log_bits = PrecisionContext::digits_to_bits(digits + magnitude_digits(abs(z).to_double()) + 3);
  const auto c = detail::spouge_coefficients(a, coef_bits);

  const HComplex w = z.rounded(std::max(coef_bits, log_bits)) - 1L;
  HComplex series{(*c)[0], HReal(coef_bits)};
  if (w.is_real()) {
    for (long k = 1; k < a; ++k) series.re += (*c)[static_cast<std::size_t>(k)] / (w.re + k);
  } else {
    for (long k = 1; k < a; ++k) series += (*c)[static_cast<std::size_t>(k)] / (w + k);
  }
  const HComplex wa = w + a;
  HComplex out = (w + HReal(0.5, log_bits)) * log(wa) - wa;
  out += log(series);
  return out;
}

}  // namespace

namespace detail {

HComplex log_gamma(const HComplex& z, int digits) {
  if (is_gamma_pole(z)) throw PoleError("Gamma has a pole at " + z.re.to_string(17));
  if (z.re >= 1L) return log_gamma_spouge(z, digits);
  const Bits bits = PrecisionContext::digits_to_bits(digits + 3);
  if (z.re * 2L >= 1L) {
    const HComplex zz = z.rounded(std::max(bits, z.precision()));
    return log_gamma_spouge(zz + 1L, digits + 1) - log(zz);
  }
  // Reflection with sin(pi z) = (-1)^n sin(pi (z - n)), n = round(Re z).
  const Bits work = std::max(bits, z.precision()) + 8;
  const HReal n = round(z.re.rounded(work));
  const HComplex w(z.re.rounded(work) - n, z.im.rounded(work));
  const HReal pi = HReal::pi(work);
  HComplex out = HComplex(log(pi)) - log(sin(w * pi)) - log_gamma(1L - z.rounded(work), digits + 1);
  out.im -= pi * n;
  return out;
}

HReal log_gamma_real(const HReal& z, int digits) {
  const HComplex lg = log_gamma(HComplex(z), digits);
  return lg.re;
}

}  // namespace detail

HComplex eval_log_gamma(const HComplex& z, const PrecisionContext& ctx) {
  return detail::log_gamma(z, ctx.working_digits() + 2);
}

HComplex eval_gamma(const HComplex& z, const PrecisionContext& ctx) {
  HComplex g = exp(detail::log_gamma(z, ctx.working_digits() + 2)).rounded(ctx.bits());
  if (z.is_real()) g.im = HReal(ctx.bits());
  return g;
}

HComplex eval_beta(const HComplex& x, const HComplex& y, const PrecisionContext& ctx) {
  const HComplex sum = x + y;
  if (is_gamma_pole(x) || is_gamma_pole(y) || is_gamma_pole(sum)) {
    throw PoleError("Beta argument at a pole of Gamma");
  }
  const int digits = ctx.working_digits() + 2;
  const Bits bits = PrecisionContext::digits_to_bits(digits + 3);

  // B(x, m) = (m-1)! / (x (x+1) ... (x+m-1)) for a small positive integer m.
  constexpr long kSmallIntegerArgument = 64;
  const HComplex* other = nullptr;
  long m = 0;
  if (y.is_real() && y.re.is_integer() && y.re > 0L && y.re <= kSmallIntegerArgument) {
    other = &x;
    m = y.re.to_long();
  } else if (x.is_real() && x.re.is_integer() && x.re > 0L && x.re <= kSmallIntegerArgument) {
    other = &y;
    m = x.re.to_long();
  }
  if (other != nullptr) {
    const Bits work = std::max(bits, other->precision()) + 8;
    const HComplex base = other->rounded(work);
    HComplex denom = base;
    HReal factorial(1, work);
    for (long i = 1; i < m; ++i) {
      denom *= (base + i);
      factorial *= i;
    }
    HComplex out = (factorial / denom).rounded(ctx.bits());
    if (x.is_real() && y.is_real()) out.im = HReal(ctx.bits());
    return out;
  }

  HComplex lb = detail::log_gamma(x, digits) + detail::log_gamma(y, digits) - detail::log_gamma(sum, digits);
  HComplex out = exp(lb).rounded(ctx.bits());
  if (x.is_real() && y.is_real()) out.im = HReal(ctx.bits());
  return out;
}

}  // namespace pochzeta
