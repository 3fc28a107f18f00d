#include "pochzeta/pochhammer.hpp"

#include <algorithm>
#include <cmath>

#include "pochzeta/errors.hpp"
#include "pochzeta/special.hpp"

namespace pochzeta {

namespace {

int log10_ceil(std::int64_t k) { return k <= 1 ? 0 : static_cast<int>(std::ceil(std::log10(static_cast<double>(k)))); }

bool vanishes(const HComplex& s, std::int64_t k) {
  return s.is_real() && s.re.is_integer() && s.re >= 1L && s.re <= static_cast<long>(k);
}

HComplex zero(const PrecisionContext& ctx) { return HComplex(ctx.bits()); }

// Accumulates ln(1 - s/r) for r in (from, to] into (log_abs, angle). Factors
// are multiplied in blocks and each block contributes its own log, so the
// angle is a sum of principal arguments and never wraps.
void accumulate_logs(const HComplex& s, std::int64_t from, std::int64_t to, HReal& log_abs, HReal& angle) {
  constexpr std::int64_t kBlock = 256;
  const Bits bits = log_abs.precision();
  for (std::int64_t lo = from; lo < to; lo += kBlock) {
    const std::int64_t hi = std::min(to, lo + kBlock);
    HComplex block(HReal(1, bits), HReal(bits));
    for (std::int64_t r = lo + 1; r <= hi; ++r) {
      block *= (static_cast<long>(r) - s);
      block /= static_cast<long>(r);
    }
    log_abs += log(norm(block)) / 2L;
    angle += arg(block);
  }
}

HComplex polar(const HReal& log_abs, const HReal& angle, Bits out_bits) {
  HReal c(angle.precision()), sn(angle.precision());
  sin_cos(angle, sn, c);
  const HReal m = exp(log_abs);
  return HComplex(m * c, m * sn).rounded(out_bits);
}

}  // namespace

namespace detail {

HComplex pochhammer_direct(const HComplex& s, std::int64_t k, const PrecisionContext& ctx) {
  if (vanishes(s, k)) return zero(ctx);
  const Bits bits = PrecisionContext::digits_to_bits(ctx.working_digits() + log10_ceil(k) + 3);
  const HComplex z = s.rounded(std::max(bits, s.precision()));
  if (z.is_real()) {
    HReal p(1, bits);
    for (std::int64_t r = 1; r <= k; ++r) {
      p *= (static_cast<long>(r) - z.re);
      p /= static_cast<long>(r);
    }
    return HComplex(p.rounded(ctx.bits()));
  }
  HComplex p(HReal(1, bits), HReal(bits));
  for (std::int64_t r = 1; r <= k; ++r) {
    p *= (static_cast<long>(r) - z);
    p /= static_cast<long>(r);
  }
  return p.rounded(ctx.bits());
}

HComplex pochhammer_log(const HComplex& s, std::int64_t k, const PrecisionContext& ctx) {
  if (vanishes(s, k)) return zero(ctx);
  const Bits bits = PrecisionContext::digits_to_bits(ctx.working_digits() + log10_ceil(k) + 3);
  const HComplex z = s.rounded(std::max(bits, s.precision()));
  HReal log_abs(bits), angle(bits);
  accumulate_logs(z, 0, k, log_abs, angle);
  HComplex out = polar(log_abs, angle, ctx.bits());
  if (z.is_real()) out.im = HReal(ctx.bits());
  return out;
}

}  // namespace detail

HComplex eval_pochhammer(const HComplex& s, std::int64_t k, const PrecisionContext& ctx) {
  if (k < 0) throw DomainError("Pochhammer degree must be >= 0");
  if (k <= kPochhammerLogCrossover) return detail::pochhammer_direct(s, k, ctx);
  return detail::pochhammer_log(s, k, ctx);
}

HComplex eval_pochhammer_shifted(const HComplex& s, const ExpansionParams& params, std::int64_t k,
                                 const PrecisionContext& ctx) {
  params.require_nonzero_beta();
  const Bits bits = ctx.bits() + 16;
  const ExpansionParams p{params.alpha.rounded(std::max(bits, params.alpha.precision())), params.beta, params.sigma};
  return eval_pochhammer(p.shifted(s.rounded(std::max(bits, s.precision()))), k, ctx);
}

HComplex pochhammer_asymptotic(const HComplex& s, const HReal& k, const PrecisionContext& ctx) {
  if (!(k > 0L)) throw DomainError("k must be positive");
  if (s.is_real() && s.re.is_integer() && s.re >= 1L) return zero(ctx);
  const Bits bits = ctx.bits() + 16;
  const HComplex lg = eval_log_gamma(1L - s.rounded(bits), ctx.with_guard(ctx.guard_digits() + 4));
  HComplex e = -(s.rounded(bits) * log(k.rounded(bits))) - lg;
  HComplex out = exp(e).rounded(ctx.bits());
  if (s.is_real()) out.im = HReal(ctx.bits());
  return out;
}

DecayReport check_decay_bound(const HComplex& s, const std::vector<std::int64_t>& k_list,
                              const PrecisionContext& ctx) {
  if (k_list.empty()) throw DomainError("k list must be nonempty");
  for (std::size_t i = 0; i < k_list.size(); ++i) {
    if (k_list[i] < 1 || (i > 0 && k_list[i] <= k_list[i - 1])) {
      throw DomainError("k list must be ascending and >= 1");
    }
  }
  DecayReport rep;
  rep.k = k_list;
  const std::int64_t k_max = k_list.back();
  const Bits bits = PrecisionContext::digits_to_bits(ctx.working_digits() + log10_ceil(k_max) + 3);
  const HComplex z = s.rounded(std::max(bits, s.precision()));
  const double sigma = z.re.to_double();

  HReal log_abs(bits), angle(bits);
  std::int64_t done = 0;
  for (const std::int64_t k : k_list) {
    double value = 0.0;
    if (!vanishes(z, k)) {
      accumulate_logs(z, done, k, log_abs, angle);
      done = k;
      value = std::exp(log_abs.to_double() + sigma * std::log(static_cast<double>(k)));
    } else {
      done = k;
      log_abs = HReal(-INFINITY, bits);
    }
    rep.scaled.push_back(value);
  }

  double running = 0.0;
  const std::size_t cut = std::max<std::size_t>(1, (rep.scaled.size() * 9 + 9) / 10);
  double at_cut = 0.0;
  for (std::size_t i = 0; i < rep.scaled.size(); ++i) {
    running = std::max(running, rep.scaled[i]);
    if (i + 1 == cut) at_cut = running;
  }
  rep.max_scaled = running;
  rep.stabilizes = running <= 1.05 * at_cut;
  return rep;
}

std::pair<HComplex, HComplex> pochhammer_step_identity(const HComplex& s, const ExpansionParams& params,
                                                       std::int64_t k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("step identity needs k >= 1");
  params.require_nonzero_beta();
  const Bits bits = ctx.bits() + 16;
  const HComplex z = (s.rounded(bits) - params.alpha) / params.beta;
  HComplex lhs = eval_pochhammer(z + 1L, k, ctx);
  HComplex rhs = (-z / static_cast<long>(k)) * eval_pochhammer(z, k - 1, ctx);
  return {std::move(lhs), rhs.rounded(ctx.bits())};
}

}  // namespace pochzeta
