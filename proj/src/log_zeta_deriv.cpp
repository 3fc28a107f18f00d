#include <algorithm>
#include <cmath>

#include "pochzeta/errors.hpp"
#include "pochzeta/primes.hpp"
#include "pochzeta/special.hpp"
#include "special_tables.hpp"

namespace pochzeta {

namespace {

constexpr double kLn10 = 2.302585092994046;

// Digits lost to the cancellation 1/(a-1) - sum near a = 1.
int cancellation_digits(double a) {
  const double gap = a - 1.0;
  return gap < 1.0 ? static_cast<int>(std::ceil(std::log10(1.0 / gap))) : 0;
}

}  // namespace

namespace detail {

unsigned long log_deriv_prime_cutoff(double a, int digits, unsigned long cap) {
  const double g = a - 1.0;
  const double target = -digits * kLn10;
  for (double p = 2.0; p <= static_cast<double>(cap); p *= 1.25) {
    const double lp = std::log(p);
    const double log_tail = std::log(2.0) - g * lp + std::log(lp / g + 1.0 / (g * g));
    if (log_tail < target) return static_cast<unsigned long>(std::ceil(p));
  }
  return 0;
}

HReal log_zeta_deriv_primes(const HReal& a, int digits, Bits out_bits, unsigned long max_prime) {
  const double ad = a.to_double();
  const int work_digits = digits + cancellation_digits(ad) + 3;
  const unsigned long cutoff = log_deriv_prime_cutoff(ad, work_digits, max_prime);
  if (cutoff == 0) return HReal::nan(out_bits);
  const PrimeTable table = sieve_primes(PrimeLimit::UpTo, std::max(2UL, cutoff));
  const Bits bits = PrecisionContext::digits_to_bits(work_digits + 3);

  const HReal x = a.rounded(bits);
  // Each dropped term is below eps / #primes.
  const HReal eps = ten_to_minus(work_digits + 1 + static_cast<long>(std::ceil(std::log10(table.size() + 1.0))), bits);
  HReal sum(bits);
  for (const std::uint64_t p : table.primes) {
    const HReal lp = log_of(p, bits);
    const HReal base = exp(-x * lp);
    if (base * lp < eps) break;
    HReal power = base;
    while (power * lp >= eps) {
      sum += power * lp;
      power *= base;
    }
  }
  return (1L / (x - 1L) - sum).rounded(out_bits);
}

HReal log_zeta_deriv_alternating(const HReal& a, int digits, Bits out_bits) {
  const double ad = a.to_double();
  if (!(ad > 1.0)) throw DomainError("log-derivative needs a > 1");
  // The ln(k+1) weights add roughly a factor a to the variation bound.
  const int work_digits = digits + cancellation_digits(ad) + 3 + static_cast<int>(std::ceil(std::log10(2.0 + ad)));
  const Bits bits = PrecisionContext::digits_to_bits(work_digits + 2);
  const HReal x = a.rounded(bits);

  const double log_rate = std::log(3.0 + std::sqrt(8.0));
  const long n = std::max(4L, static_cast<long>(std::ceil((work_digits * kLn10 + 2.0 * kLn10) / log_rate)));
  const Bits sum_bits = PrecisionContext::digits_to_bits(work_digits + static_cast<int>(std::ceil(std::log10(n))) + 4);
  const auto weights = alternating_weights(n, sum_bits);

  const HReal xs = x.rounded(sum_bits);
  HReal eta = HReal((*weights)[0], sum_bits);
  HReal eta_prime(sum_bits);
  for (long k = 1; k < n; ++k) {
    const HReal lk = log_of(static_cast<unsigned long>(k + 1), sum_bits);
    const HReal term = exp(-xs * lk) * (*weights)[static_cast<std::size_t>(k)];
    eta += term;
    eta_prime -= term * lk;
  }

  const HReal g = x - 1L;
  const HReal u = g * HReal::ln2(bits);
  const HReal first = (1L - u / expm1(u)) / g;
  return (first + eta_prime / eta).rounded(out_bits);
}

}  // namespace detail

HReal eval_log_zeta_deriv(const HReal& a, const PrecisionContext& ctx) {
  if (!(a > 1L)) throw DomainError("log-derivative needs a > 1");
  const int digits = ctx.working_digits() + 2;
  HReal r = detail::log_zeta_deriv_primes(a, digits, ctx.bits(), detail::kLogDerivPrimeCap);
  if (r.is_nan()) r = detail::log_zeta_deriv_alternating(a, digits, ctx.bits());
  return r;
}

HReal zeta_log_derivative_constant(const PrecisionContext& ctx) {
  const Bits bits = ctx.bits() + 8;
  return (log(HReal::pi(bits) * 2L) - 1L).rounded(ctx.bits());
}

}  // namespace pochzeta
