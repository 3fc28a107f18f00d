#include "pochzeta/critical.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>

#include "pochzeta/coefficients.hpp"
#include "pochzeta/errors.hpp"
#include "pochzeta/special.hpp"

namespace pochzeta {

namespace {

HReal exponent_factor(const HReal& x, const ExpansionParams& params, Bits bits) {
  const HReal a = params.alpha.re.rounded(bits);
  const HReal b = params.beta.re.rounded(bits);
  return exp(x.rounded(std::max(bits, x.precision())) * (a - params.sigma.rounded(bits)) / b);
}

void check_zero_count(const ZeroTable& zeros, std::int64_t n_zeros) {
  if (n_zeros < 0 || static_cast<std::size_t>(n_zeros) > zeros.size()) {
    throw DomainError("n_zeros = " + std::to_string(n_zeros) + " but the table holds " +
                      std::to_string(zeros.size()) + " ordinates");
  }
}

// Runs f(i) for i in [0, n), spreading indices over the available cores.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  const unsigned cores = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(cores, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

ExpansionParams critical_default_params(Bits bits) { return make_params(4.5, 4.0, 0.5, bits); }

HComplex psi1_complex(const HReal& x, const ExpansionParams& params, const ZeroTable& zeros, std::int64_t n_zeros,
                      std::int64_t n_trivial, const PrecisionContext& ctx, bool asymptotic) {
  check_zero_count(zeros, n_zeros);
  const Bits bits = ctx.bits() + 8;
  const HReal k = exp(x.rounded(std::max(bits, x.precision())));
  const HComplex d =
      compute_dhat_zeros_beta(params, k, zeros.first(static_cast<std::size_t>(n_zeros)), n_trivial, ctx, asymptotic);
  return (d * exponent_factor(x, params, bits)).rounded(ctx.bits());
}

HReal psi1(const HReal& x, const ExpansionParams& params, const ZeroTable& zeros, std::int64_t n_zeros,
           std::int64_t n_trivial, const PrecisionContext& ctx, bool asymptotic) {
  return psi1_complex(x, params, zeros, n_zeros, n_trivial, ctx, asymptotic).re;
}

HReal psi2(const HReal& x, const ExpansionParams& params, const PrimeTable& primes, std::int64_t q_max,
           bool approx_paper, const PrecisionContext& ctx, bool asymptotic) {
  params.require_real_family();
  if (primes.empty()) throw DomainError("prime table is empty");
  const Bits bits = ctx.bits() + 8;
  const HReal k = exp(x.rounded(std::max(bits, x.precision())));
  const HReal d = compute_dhat_primes(params, k, primes, q_max, ctx, {approx_paper, asymptotic});
  return (d * exponent_factor(x, params, bits)).rounded(ctx.bits());
}

SweepSummary summarize_sweep(const std::vector<CriticalSample>& samples) {
  SweepSummary s;
  if (samples.empty()) return s;
  std::vector<double> v;
  for (const auto& c : samples) {
    v.push_back(c.psi1.to_double());
    s.max_diff = std::max(s.max_diff, std::abs(c.diff.to_double()));
  }
  double total = 0.0;
  for (const double x : v) total += x;
  s.mean_psi1 = total / static_cast<double>(v.size());

  int previous = 0;
  for (const double x : v) {
    const int sign = x > s.mean_psi1 ? 1 : (x < s.mean_psi1 ? -1 : 0);
    if (sign != 0) {
      if (previous != 0 && sign != previous) ++s.sign_changes;
      previous = sign;
    }
  }

  std::vector<double> extrema;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const bool is_max = v[i] > v[i - 1] && v[i] >= v[i + 1];
    const bool is_min = v[i] < v[i - 1] && v[i] <= v[i + 1];
    if (is_max) ++s.local_maxima;
    if (is_max || is_min) extrema.push_back(v[i]);
  }
  if (extrema.size() >= 2) {
    std::vector<double> half;
    for (std::size_t i = 1; i < extrema.size(); ++i) half.push_back(std::abs(extrema[i] - extrema[i - 1]) / 2.0);
    std::nth_element(half.begin(), half.begin() + static_cast<std::ptrdiff_t>(half.size() / 2), half.end());
    s.amplitude = half[half.size() / 2];
  } else {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    s.amplitude = (*hi - *lo) / 2.0;
  }
  return s;
}

CriticalSweep sweep_critical(double x_min, double x_max, int n_points, const ExpansionParams& params,
                             const ZeroTable& zeros, const PrimeTable& primes, const CriticalOptions& opts,
                             const PrecisionContext& ctx) {
  if (!(x_min < x_max)) throw DomainError("x_min must be below x_max");
  if (n_points < 2) throw DomainError("a sweep needs at least 2 points");
  check_zero_count(zeros, opts.n_zeros);
  const Bits bits = ctx.bits();
  const ZeroTable used = zeros.first(static_cast<std::size_t>(opts.n_zeros));

  CriticalSweep out;
  out.samples.resize(static_cast<std::size_t>(n_points));
  const HReal lo(x_min, bits);
  const HReal step = (HReal(x_max, bits) - lo) / static_cast<long>(n_points - 1);
  parallel_for(out.samples.size(), [&](std::size_t i) {
    CriticalSample c;
    c.x = lo + step * static_cast<long>(i);
    c.k = exp(c.x);
    c.psi1 = psi1(c.x, params, used, opts.n_zeros, opts.n_trivial, ctx, opts.asymptotic);
    c.psi2 = psi2(c.x, params, primes, opts.q_max, opts.approx_paper, ctx, opts.asymptotic);
    c.diff = c.psi1 - c.psi2;
    out.samples[i] = std::move(c);
  });
  out.summary = summarize_sweep(out.samples);
  return out;
}

std::vector<std::pair<HReal, HReal>> prime_contribution(std::uint64_t p, const std::vector<HReal>& x_grid,
                                                        const ExpansionParams& params, std::int64_t q_max,
                                                        const PrecisionContext& ctx, bool approx_paper) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  params.require_real_family();
  if (q_max < 1) throw DomainError("q_max must be >= 1");
  PrimeTable single;
  single.primes = {p};
  single.limit_kind = PrimeLimit::FirstN;
  single.bound = 1;
  const Bits bits = ctx.bits() + 8;
  std::vector<std::pair<HReal, HReal>> out;
  out.reserve(x_grid.size());
  for (const HReal& x : x_grid) {
    const HReal k = exp(x.rounded(std::max(bits, x.precision())));
    const HReal sum = detail::prime_power_sum(params, k, single, q_max, ctx, approx_paper);
    out.emplace_back(x, (-sum * exponent_factor(x, params, bits)).rounded(ctx.bits()));
  }
  return out;
}

namespace {

HComplex infbeta_sum(const HReal* log_k, const HComplex& alpha, const HComplex& beta, const HReal& sigma,
                     const ZeroTable& zeros, std::int64_t n_zeros, std::int64_t n_trivial, const PrecisionContext& ctx) {
  check_zero_count(zeros, n_zeros);
  if (n_trivial < 0) throw DomainError("n_trivial must be >= 0");
  const Bits bits = PrecisionContext::digits_to_bits(ctx.working_digits() + 4);
  const HReal half(0.5, bits);
  const HComplex a = alpha.rounded(std::max(bits, alpha.precision()));
  // k^-(w/beta) for the given exponent w; 1 in the limit.
  auto k_power = [&](const HComplex& w) {
    if (log_k == nullptr) return HComplex(HReal(1, bits));
    return exp(-(w / beta) * *log_k);
  };

  HComplex sum(bits);
  for (std::int64_t j = 0; j < n_zeros; ++j) {
    const HReal& t = zeros[static_cast<std::size_t>(j)];
    for (const HComplex& rho : {HComplex(half, t.rounded(bits)), HComplex(half, -t.rounded(bits))}) {
      const HComplex denom = rho * (a - rho);
      if (denom.is_zero()) throw DomainError("alpha coincides with a zero");
      sum += k_power(HComplex(sigma) - rho) / denom;
    }
  }
  for (std::int64_t n = 1; n <= n_trivial; ++n) {
    const HComplex denom = (a + static_cast<long>(2 * n)) * static_cast<long>(2 * n);
    if (denom.is_zero()) throw DomainError("alpha coincides with a trivial zero");
    sum -= k_power(HComplex(sigma + static_cast<long>(2 * n))) / denom;
  }
  if (a.is_zero()) throw DomainError("alpha must be nonzero");
  const HReal c = zeta_log_derivative_constant(ctx.with_guard(ctx.guard_digits() + 4));
  sum += k_power(HComplex(sigma)) * c / a;
  return sum;
}

}  // namespace

HReal psi_infbeta(const HReal& k, const ExpansionParams& params, const ZeroTable& zeros, std::int64_t n_zeros,
                  std::int64_t n_trivial, const PrecisionContext& ctx) {
  if (!(k > 0L)) throw DomainError("k must be positive");
  params.require_nonzero_beta();
  const Bits bits = PrecisionContext::digits_to_bits(ctx.working_digits() + 4);
  const HReal log_k = log(k.rounded(std::max(bits, k.precision())));
  const HComplex beta = params.beta.rounded(std::max(bits, params.beta.precision()));
  return abs(infbeta_sum(&log_k, params.alpha, beta, params.sigma.rounded(bits), zeros, n_zeros, n_trivial, ctx))
      .rounded(ctx.bits());
}

HReal psi_infbeta_limit(const HReal& alpha, const ZeroTable& zeros, std::int64_t n_zeros, std::int64_t n_trivial,
                        const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  return abs(infbeta_sum(nullptr, HComplex(alpha), HComplex(HReal(1, bits)), HReal(bits), zeros, n_zeros,
                         n_trivial, ctx))
      .rounded(bits);
}

HReal trivial_zero_sum(const HReal& alpha, std::int64_t n_trivial, const PrecisionContext& ctx) {
  if (n_trivial < 0) throw DomainError("n_trivial must be >= 0");
  const Bits bits = PrecisionContext::digits_to_bits(ctx.working_digits() + 4);
  const HReal a = alpha.rounded(std::max(bits, alpha.precision()));
  HReal sum(bits);
  for (std::int64_t n = 1; n <= n_trivial; ++n) {
    HReal denom = (a + static_cast<long>(2 * n)) * static_cast<long>(2 * n);
    if (denom.is_zero()) throw DomainError("alpha coincides with a trivial zero");
    sum += 1L / denom;
  }
  return sum.rounded(ctx.bits());
}

HReal gamma_limit_primes(const HReal& alpha, const PrecisionContext& ctx) {
  if (!(alpha > 1L)) throw DomainError("alpha must be > 1");
  const Bits bits = ctx.bits() + 8;
  return (eval_log_zeta_deriv(alpha, ctx) / alpha.rounded(std::max(bits, alpha.precision()))).rounded(ctx.bits());
}

void write_critical_csv(std::ostream& out, const std::vector<CriticalSample>& samples, int digits) {
  out << "x,k,psi1,psi2,diff\n";
  for (const auto& c : samples) {
    out << c.x.to_string(digits) << ',' << c.k.to_string(digits) << ',' << c.psi1.to_string(digits) << ','
        << c.psi2.to_string(digits) << ',' << c.diff.to_string(digits) << '\n';
  }
}

}  // namespace pochzeta
