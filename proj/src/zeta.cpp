#include <algorithm>
#include <cmath>

#include "pochzeta/errors.hpp"
#include "pochzeta/special.hpp"
#include "special_tables.hpp"

namespace pochzeta {

namespace {

constexpr double kLn10 = 2.302585092994046;

int ceil_log10(double x) { return x <= 1.0 ? 0 : static_cast<int>(std::ceil(std::log10(x))); }

// n^-s at `bits` given ln n.
HComplex power_minus_s(const HComplex& s, const HReal& log_n) { return exp_times(-s, log_n); }

// 2^(1-s)
HComplex two_to_one_minus_s(const HComplex& s, Bits bits) {
  return exp_times(1L - s.rounded(bits), HReal::ln2(bits));
}

bool is_exactly_one(const HComplex& s) { return s.im.is_zero() && s.re == 1L; }

}  // namespace

namespace detail {

HComplex eta_accelerated(const HComplex& s, int digits, Bits out_bits) {
  const double sigma = s.re.to_double();
  const double t = std::abs(s.im.to_double());
  if (!(sigma > 0.0)) throw DomainError("accelerated eta needs Re(s) > 0");

  // Total variation of the measure behind (k+1)^-s is at most
  // e^(pi t / 2) (1 + t / sigma).
  const double log_variation = M_PI * t / 2.0 + std::log(2.0 + t / sigma);
  const double log_rate = std::log(3.0 + std::sqrt(8.0));
  const long n = std::max(
      4L, static_cast<long>(std::ceil((digits * kLn10 + log_variation + std::log(2.0) + kLn10) / log_rate)));
  const Bits bits = PrecisionContext::digits_to_bits(digits + ceil_log10(static_cast<double>(n)) + 4);

  const auto weights = alternating_weights(n, bits);
  const HComplex z = s.rounded(bits);
  HComplex sum(bits);
  sum += HComplex(HReal((*weights)[0], bits));
  for (long k = 1; k < n; ++k) {
    sum += power_minus_s(z, log_of(static_cast<unsigned long>(k + 1), bits)) * (*weights)[static_cast<std::size_t>(k)];
  }
  return sum.rounded(out_bits);
}

HComplex zeta_euler_maclaurin(const HComplex& s, int digits, Bits out_bits) {
  if (is_exactly_one(s)) throw PoleAtOne();
  const double sigma = s.re.to_double();
  const double s_abs = abs(s).to_double();

  // Consecutive correction terms shrink by about ((|s| + 2j) / (2 pi N))^2,
  // at most 1/4 with this N.
  const long m = static_cast<long>(std::ceil(digits * kLn10 / std::log(4.0))) + 2;
  const long n = std::max(2L, static_cast<long>(std::ceil((s_abs + 2.0 * m + 2.0) / M_PI)));
  const double nd = static_cast<double>(n);
  const int extra = static_cast<int>(std::ceil(std::max(0.0, 1.0 - sigma) * std::log10(nd))) + ceil_log10(nd) + 5;
  const Bits bits = PrecisionContext::digits_to_bits(digits + extra);
  const HComplex z = s.rounded(bits);

  HComplex sum(bits);
  sum.re = HReal(1, bits);
  for (long k = 2; k < n; ++k) sum += power_minus_s(z, log_of(static_cast<unsigned long>(k), bits));

  const HReal log_n = log_of(static_cast<unsigned long>(n), bits);
  const HComplex n_minus_s = power_minus_s(z, log_n);
  const HReal big_n(n, bits);
  sum += n_minus_s * big_n / (z - 1L);
  sum += n_minus_s / 2L;

  const auto table = bernoulli_over_factorial(m + 1);
  HComplex rising = z;                   // (s)_(2j-1)
  HComplex power = n_minus_s / big_n;    // N^(1-s-2j)
  const HReal n_squared = big_n * big_n;
  for (long j = 1; j <= m; ++j) {
    const mpq_class& tj = (*table)[static_cast<std::size_t>(j)];
    HReal coef(mpz_class(tj.get_num()), bits);
    coef /= HReal(mpz_class(tj.get_den()), bits);
    sum += rising * power * coef;
    rising *= (z + (2 * j - 1));
    rising *= (z + 2 * j);
    power /= n_squared;
  }
  return sum.rounded(out_bits);
}

}  // namespace detail

HComplex eval_eta_factor(const HComplex& s, const PrecisionContext& ctx) {
  if (!(s.re > 0L)) throw DomainError("eta factor series needs Re(s) > 0");
  return detail::eta_accelerated(s, ctx.working_digits() + 2, ctx.bits());
}

HComplex eval_zeta(const HComplex& s, const PrecisionContext& ctx) {
  if (is_exactly_one(s)) throw PoleAtOne();
  if (!(s.re > 0L)) throw DomainError("zeta series needs Re(s) > 0");
  const int digits = ctx.working_digits() + 2;
  const Bits probe_bits = PrecisionContext::digits_to_bits(digits + 5);
  const HComplex denom = 1L - two_to_one_minus_s(s, probe_bits);
  const double size = abs(denom).to_double();
  if (size < 1e-2) return detail::zeta_euler_maclaurin(s, digits, ctx.bits());
  const int extra = ceil_log10(1.0 / size) + 1;
  const HComplex eta = detail::eta_accelerated(s, digits + extra, PrecisionContext::digits_to_bits(digits + extra));
  return (eta / denom).rounded(ctx.bits());
}

HComplex eval_zeta_continued(const HComplex& s, const PrecisionContext& ctx) {
  if (is_exactly_one(s)) throw PoleAtOne();
  if (s.re > 0L) return eval_zeta(s, ctx);
  if (s.is_real() && s.re.is_zero()) return HComplex(HReal(-0.5, ctx.bits()));
  return detail::zeta_euler_maclaurin(s, ctx.working_digits() + 2, ctx.bits());
}

HComplex eval_eta_factor_continued(const HComplex& s, const PrecisionContext& ctx) {
  if (s.re > 0L) return eval_eta_factor(s, ctx);
  const int digits = ctx.working_digits() + 2;
  const Bits bits = PrecisionContext::digits_to_bits(digits);
  const HComplex factor = 1L - two_to_one_minus_s(s, bits);
  // |1 - 2^(1-s)| grows like 2^(1-sigma); compensate for it.
  const int extra = ceil_log10(abs(factor).to_double());
  const HComplex z = eval_zeta_continued(s, PrecisionContext(ctx.target_digits(), ctx.guard_digits() + extra + 2));
  return (factor * z).rounded(ctx.bits());
}

}  // namespace pochzeta
