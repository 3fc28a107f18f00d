#include "pochzeta/coefficients.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <gmpxx.h>

#include "beta_kernel.hpp"
#include "pochzeta/errors.hpp"
#include "pochzeta/special.hpp"

namespace pochzeta {

namespace {

constexpr double kLn10 = 2.302585092994046;

std::string format_param(const HComplex& z) {
  char buf[64];
  if (z.is_real()) {
    std::snprintf(buf, sizeof buf, "%.17g", z.re.to_double());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.re.to_double(), z.im.to_double());
  }
  return buf;
}

void check_k_max(std::int64_t k_max) {
  if (k_max < 0) throw DomainError("k_max must be >= 0");
}

CoefficientSeries make_series(CoefficientKind kind, CoefficientRoute route, const ExpansionParams& params,
                              const PrecisionContext& ctx, std::vector<HComplex> values) {
  CoefficientSeries out;
  out.kind = kind;
  out.route = route;
  out.params = params;
  out.ctx = ctx;
  out.values = std::move(values);
  return out;
}

HComplex beta_inverse(const ExpansionParams& params, Bits bits) {
  return 1L / params.beta.rounded(std::max(bits, params.beta.precision()));
}

}  // namespace

std::string_view to_string(CoefficientKind kind) noexcept {
  switch (kind) {
    case CoefficientKind::B: return "b";
    case CoefficientKind::A: return "A";
    case CoefficientKind::D: return "d";
    case CoefficientKind::DHAT: return "dhat";
    case CoefficientKind::DHATHAT: return "dhathat";
    case CoefficientKind::S: return "s";
  }
  return "?";
}

std::string_view to_string(CoefficientRoute route) noexcept {
  switch (route) {
    case CoefficientRoute::Binomial: return "binomial";
    case CoefficientRoute::ZerosBeta: return "zeros_beta";
    case CoefficientRoute::Primes: return "primes";
    case CoefficientRoute::ClosedForm: return "closed_form";
  }
  return "?";
}

void CoefficientSeries::write_csv(std::ostream& out, bool header) const {
  if (header) out << "k,re,im,kind,alpha,beta,route,digits\n";
  const int digits = ctx.target_digits();
  const std::string alpha = format_param(params.alpha);
  const std::string beta = format_param(params.beta);
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << first_k + static_cast<std::int64_t>(i) << ',' << values[i].re.to_string(digits) << ','
        << values[i].im.to_string(digits) << ',' << to_string(kind) << ',' << alpha << ',' << beta << ','
        << to_string(route) << ',' << digits << '\n';
  }
}

std::vector<HComplex> binomial_transform(const std::vector<HComplex>& f, const PrecisionContext& ctx) {
  if (f.empty()) return {};
  const auto k_max = static_cast<std::int64_t>(f.size()) - 1;
  ctx.check_binomial_order(k_max);
  const Bits bits = ctx.bits();
  bool real = true;
  for (const auto& v : f) real = real && v.is_real();

  std::vector<HComplex> out;
  out.reserve(f.size());
  std::vector<mpz_class> row{1};
  for (std::int64_t k = 0; k <= k_max; ++k) {
    if (k > 0) {
      row.push_back(1);
      for (std::size_t j = row.size() - 2; j > 0; --j) row[j] += row[j - 1];
    }
    HReal re(bits), im(bits);
    for (std::int64_t j = 0; j <= k; ++j) {
      const HReal c(row[static_cast<std::size_t>(j)], bits);
      const HComplex& v = f[static_cast<std::size_t>(j)];
      if (j % 2 == 0) {
        re += c * v.re;
        if (!real) im += c * v.im;
      } else {
        re -= c * v.re;
        if (!real) im -= c * v.im;
      }
    }
    out.emplace_back(std::move(re), std::move(im));
  }
  return out;
}

CoefficientSeries compute_b(const ExpansionParams& params, std::int64_t k_max, const PrecisionContext& ctx) {
  check_k_max(k_max);
  params.require_nonzero_beta();
  ctx.check_binomial_order(k_max);
  std::vector<HComplex> f;
  for (std::int64_t j = 0; j <= k_max; ++j) {
    const HComplex s = params.node(static_cast<long>(j)).rounded(ctx.bits());
    if (!(s.re > 0L)) throw DomainError("Re(alpha + beta j) must be > 0 for j = " + std::to_string(j));
    f.push_back(eval_eta_factor(s, ctx));
  }
  return make_series(CoefficientKind::B, CoefficientRoute::Binomial, params, ctx, binomial_transform(f, ctx));
}

CoefficientSeries compute_maslanka_A(std::int64_t k_max, const PrecisionContext& ctx) {
  check_k_max(k_max);
  ctx.check_binomial_order(k_max);
  const Bits bits = ctx.bits();
  std::vector<HComplex> f;
  for (std::int64_t j = 0; j <= k_max; ++j) {
    const HComplex z = eval_zeta(HComplex(HReal(2 * j + 2, bits)), ctx);
    f.push_back(z * static_cast<long>(2 * j + 1));
  }
  const ExpansionParams params = make_params(2.0, 2.0, 0.0, bits);
  return make_series(CoefficientKind::A, CoefficientRoute::Binomial, params, ctx, binomial_transform(f, ctx));
}

CoefficientSeries compute_d(const ExpansionParams& params, std::int64_t k_max, const PrecisionContext& ctx) {
  check_k_max(k_max);
  params.require_nonzero_beta();
  ctx.check_binomial_order(k_max);
  std::vector<HComplex> f;
  for (std::int64_t j = 0; j <= k_max; ++j) {
    const HComplex s = params.node(static_cast<long>(j)).rounded(ctx.bits());
    if (!(s.re > 0L)) throw DomainError("Re(alpha + beta j) must be > 0 for j = " + std::to_string(j));
    const HComplex e = eval_eta_factor(s, ctx);
    if (e.is_real()) {
      if (!(e.re > 0L)) throw DomainError("eta factor is not positive at j = " + std::to_string(j));
      f.emplace_back(log(e.re));
    } else {
      f.push_back(log(e));
    }
  }
  return make_series(CoefficientKind::D, CoefficientRoute::Binomial, params, ctx, binomial_transform(f, ctx));
}

CoefficientSeries compute_dhat_binomial(const ExpansionParams& params, std::int64_t k_max,
                                        const PrecisionContext& ctx) {
  check_k_max(k_max);
  params.require_real_family();
  ctx.check_binomial_order(k_max);
  std::vector<HComplex> f;
  for (std::int64_t j = 0; j <= k_max; ++j) {
    const HReal a = params.node(static_cast<long>(j)).re.rounded(ctx.bits());
    f.emplace_back(eval_log_zeta_deriv(a, ctx));
  }
  return make_series(CoefficientKind::DHAT, CoefficientRoute::Binomial, params, ctx, binomial_transform(f, ctx));
}

HComplex compute_dhat_zeros_beta(const ExpansionParams& params, const HReal& k, const ZeroTable& zeros,
                                 std::int64_t n_trivial, const PrecisionContext& ctx, bool asymptotic) {
  params.require_nonzero_beta();
  if (!(k >= 1L)) throw DomainError("k must be >= 1");
  if (n_trivial < 0) throw DomainError("n_trivial must be >= 0");
  const Bits bits = ctx.bits() + 8;
  const detail::BetaKernel kernel(k, ctx, asymptotic);
  const HComplex alpha = params.alpha.rounded(std::max(bits, params.alpha.precision()));
  const HComplex inv_beta = beta_inverse(params, bits);
  const HReal half(0.5, bits);

  HComplex sum(bits);
  for (const HReal& t : zeros.ordinates) {
    const HReal tt = t.rounded(std::max(bits, t.precision()));
    sum += kernel((alpha - HComplex(half, tt)) * inv_beta);
    sum += kernel((alpha - HComplex(half, -tt)) * inv_beta);
  }
  const HReal eps = ten_to_minus(ctx.working_digits() + 2, bits);
  for (std::int64_t n = 1; n <= n_trivial; ++n) {
    const HComplex a = (alpha + static_cast<long>(2 * n)) * inv_beta;
    const HComplex term = kernel(a);
    sum += term;
    // Exact Beta terms decrease in a; Gamma(a) k^-a only once a exceeds k.
    if (abs(term) < eps * abs(sum) && (!asymptotic || abs(a) < k)) break;
  }
  return (sum * inv_beta).rounded(ctx.bits());
}

namespace detail {

HReal prime_power_sum(const ExpansionParams& params, const HReal& k, const PrimeTable& primes, std::int64_t q_max,
                      const PrecisionContext& ctx, bool approx_paper) {
  const int digits = ctx.working_digits() + 2;
  const Bits bits = PrecisionContext::digits_to_bits(digits + 2);
  const HReal alpha = params.alpha.re.rounded(bits);
  const HReal beta = params.beta.re.rounded(bits);
  const HReal kk = k.rounded(std::max(bits, k.precision()));

  const double count = static_cast<double>(primes.size()) + 1.0;
  const HReal eps = ten_to_minus(digits + static_cast<long>(std::ceil(std::log10(count * q_max))), bits);
  const HReal cutoff(digits * kLn10, bits);
  HReal sum(bits);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const HReal lp = log_of(primes[i], bits);
    const HReal x = exp(-alpha * lp);
    const HReal y = exp(-beta * lp);
    // ln p / p^alpha decreases from p = 3 on.
    if (i > 0 && x * lp < eps) break;
    HReal xq = x, yq = y;
    for (std::int64_t q = 1; q <= q_max; ++q) {
      if (xq * lp < eps) break;
      const HReal ky = kk * yq;
      if (ky <= cutoff) {
        const HReal factor = approx_paper ? exp(-ky) : exp(kk * log1p(-yq));
        sum += lp * xq * factor;
      }
      xq *= x;
      yq *= y;
    }
  }
  return sum;
}

}  // namespace detail

HReal compute_dhat_primes(const ExpansionParams& params, const HReal& k, const PrimeTable& primes,
                          std::int64_t q_max, const PrecisionContext& ctx, PrimeRouteOptions opts) {
  params.require_real_family();
  if (!(k >= 1L)) throw DomainError("k must be >= 1");
  if (q_max < 1) throw DomainError("q_max must be >= 1");
  const Bits bits = ctx.bits() + 8;
  const HReal alpha = params.alpha.re.rounded(bits);
  const HReal beta = params.beta.re.rounded(bits);
  const detail::BetaKernel kernel(k, ctx, opts.asymptotic);
  const HReal first = kernel(HComplex((alpha - 1L) / beta)).re / beta;
  const HReal sum = detail::prime_power_sum(params, k, primes, q_max, ctx, opts.approx_paper);
  return (first - sum).rounded(ctx.bits());
}

double prime_route_tail(const ExpansionParams& params, const PrimeTable& primes, std::int64_t q_max) {
  const double a = params.alpha.re.to_double();
  const double g = a - 1.0;
  double tail = 0.0;
  if (!primes.empty()) {
    const double p = static_cast<double>(primes.primes.back());
    const double lp = std::log(p);
    tail += std::pow(p, -g) * (lp / g + 1.0 / (g * g));
  }
  // Powers beyond q_max, dominated by p = 2.
  tail += 2.0 * std::log(2.0) * std::pow(2.0, -a * static_cast<double>(q_max + 1)) / (1.0 - std::pow(2.0, -a));
  return tail;
}

HComplex compute_dhathat(const ExpansionParams& params, const HReal& k, const ZeroTable& zeros,
                         std::int64_t n_trivial, const PrecisionContext& ctx, bool asymptotic) {
  params.require_nonzero_beta();
  if (asymptotic ? !(k >= 1L) : !(k >= 0L)) throw DomainError("k must be >= 1 (>= 0 for the exact form)");
  if (n_trivial < 0) throw DomainError("n_trivial must be >= 0");
  const Bits bits = ctx.bits() + 8;
  const detail::BetaKernel kernel(k, ctx, asymptotic);
  const HComplex alpha = params.alpha.rounded(std::max(bits, params.alpha.precision()));
  const HComplex inv_beta = beta_inverse(params, bits);
  const HReal half(0.5, bits);

  HComplex sum(bits);
  for (const HReal& t : zeros.ordinates) {
    const HReal tt = t.rounded(std::max(bits, t.precision()));
    for (const HComplex& rho : {HComplex(half, tt), HComplex(half, -tt)}) {
      sum += kernel((alpha - rho) * inv_beta) / rho;
    }
  }
  const HReal eps = ten_to_minus(ctx.working_digits() + 2, bits);
  for (std::int64_t n = 1; n <= n_trivial; ++n) {
    const HComplex a = (alpha + static_cast<long>(2 * n)) * inv_beta;
    const HComplex term = kernel(a) / static_cast<long>(2 * n);
    sum -= term;
    if (abs(term) < eps * abs(sum) && (!asymptotic || abs(a) < k)) break;
  }
  const HReal c = zeta_log_derivative_constant(PrecisionContext(ctx.target_digits(), ctx.guard_digits() + 3));
  sum += kernel(alpha * inv_beta) * c;
  return (sum * inv_beta).rounded(ctx.bits());
}

HReal compute_s(const ExpansionParams& params, std::int64_t k, const PrecisionContext& ctx) {
  params.require_real_family();
  if (k < 0) throw DomainError("k must be >= 0");
  const Bits bits = ctx.bits() + 8;
  const HReal beta = params.beta.re.rounded(bits);
  const HComplex a((params.alpha.re.rounded(bits) - 1L) / beta);
  const HComplex b = eval_beta(a, HComplex(HReal(k + 1, bits)), ctx.with_guard(ctx.guard_digits() + 2));
  return (b.re / beta).rounded(ctx.bits());
}

CoefficientSeries compute_s_series(const ExpansionParams& params, std::int64_t k_max, const PrecisionContext& ctx) {
  check_k_max(k_max);
  std::vector<HComplex> values;
  for (std::int64_t k = 0; k <= k_max; ++k) values.emplace_back(compute_s(params, k, ctx));
  return make_series(CoefficientKind::S, CoefficientRoute::ClosedForm, params, ctx, std::move(values));
}

CoefficientSeries compute_s_binomial(const ExpansionParams& params, std::int64_t k_max,
                                     const PrecisionContext& ctx) {
  check_k_max(k_max);
  params.require_real_family();
  ctx.check_binomial_order(k_max);
  std::vector<HComplex> f;
  for (std::int64_t j = 0; j <= k_max; ++j) {
    const HReal a = params.node(static_cast<long>(j)).re.rounded(ctx.bits());
    f.emplace_back(1L / (a - 1L));
  }
  return make_series(CoefficientKind::S, CoefficientRoute::Binomial, params, ctx, binomial_transform(f, ctx));
}

}  // namespace pochzeta
