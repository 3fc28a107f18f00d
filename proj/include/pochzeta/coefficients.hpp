#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "pochzeta/hcomplex.hpp"
#include "pochzeta/params.hpp"
#include "pochzeta/precision.hpp"
#include "pochzeta/primes.hpp"
#include "pochzeta/zeros.hpp"

namespace pochzeta {

enum class CoefficientKind { B, A, D, DHAT, DHATHAT, S };
enum class CoefficientRoute { Binomial, ZerosBeta, Primes, ClosedForm };

std::string_view to_string(CoefficientKind kind) noexcept;
std::string_view to_string(CoefficientRoute route) noexcept;

/// Coefficients c_k for k = first_k, first_k + 1, ...
struct CoefficientSeries {
  CoefficientKind kind = CoefficientKind::B;
  ExpansionParams params;
  std::vector<HComplex> values;
  CoefficientRoute route = CoefficientRoute::Binomial;
  PrecisionContext ctx{PrecisionContext::kMinTargetDigits};
  std::int64_t first_k = 0;

  std::size_t size() const noexcept { return values.size(); }
  const HComplex& at(std::int64_t k) const { return values.at(static_cast<std::size_t>(k - first_k)); }

  /// CSV with columns k,re,im,kind,alpha,beta,route,digits.
  void write_csv(std::ostream& out, bool header = true) const;
};

/// sum_j (-1)^j C(k, j) f_j for k = 0..f.size()-1, with exact binomials.
/// Throws PrecisionError if ctx cannot absorb order f.size()-1.
std::vector<HComplex> binomial_transform(const std::vector<HComplex>& f, const PrecisionContext& ctx);

/// b_k: binomial transform of the eta factor at alpha + beta j.
/// Throws DomainError if some Re(alpha + beta j) <= 0.
CoefficientSeries compute_b(const ExpansionParams& params, std::int64_t k_max, const PrecisionContext& ctx);

/// A_k: binomial transform of (2j + 1) zeta(2j + 2); params are alpha = beta = 2.
CoefficientSeries compute_maslanka_A(std::int64_t k_max, const PrecisionContext& ctx);

/// d_k: binomial transform of ln of the eta factor. Real values must be
/// positive (DomainError); complex values use the principal logarithm.
CoefficientSeries compute_d(const ExpansionParams& params, std::int64_t k_max, const PrecisionContext& ctx);

/// d^_k by the binomial transform of eval_log_zeta_deriv(alpha + beta j).
/// Needs real alpha > 1, beta > 0.
CoefficientSeries compute_dhat_binomial(const ExpansionParams& params, std::int64_t k_max,
                                        const PrecisionContext& ctx);

/// d^_k from the zeros: (1/beta) [sum over rho, conj(rho) of B((alpha - rho)/beta, k + 1)
/// + sum_{n <= n_trivial} B((alpha + 2n)/beta, k + 1)]. With `asymptotic`,
/// B(a, k + 1) becomes Gamma(a) k^-a. k may be any real >= 1.
HComplex compute_dhat_zeros_beta(const ExpansionParams& params, const HReal& k, const ZeroTable& zeros,
                                 std::int64_t n_trivial, const PrecisionContext& ctx, bool asymptotic = false);

struct PrimeRouteOptions {
  /// (1 - p^-beta q)^k replaced by exp(-k p^-beta q).
  bool approx_paper = false;
  /// First term (1/beta) Gamma(a) k^-a instead of (1/beta) B(a, k + 1).
  bool asymptotic = false;
};

/// d^_k from the primes: s_k - sum_p ln p sum_{q <= q_max} p^-alpha q (1 - p^-beta q)^k.
/// Terms with k p^-beta q beyond ln(10) working_digits are dropped. k may be
/// any real >= 1.
HReal compute_dhat_primes(const ExpansionParams& params, const HReal& k, const PrimeTable& primes,
                          std::int64_t q_max, const PrecisionContext& ctx, PrimeRouteOptions opts = {});

namespace detail {
/// sum_p ln p sum_{q <= q_max} p^-alpha q (1 - p^-beta q)^k, the prime part of
/// compute_dhat_primes.
HReal prime_power_sum(const ExpansionParams& params, const HReal& k, const PrimeTable& primes, std::int64_t q_max,
                      const PrecisionContext& ctx, bool approx_paper);
}  // namespace detail

/// Bound on what compute_dhat_primes leaves out: the primes beyond the
/// table and the powers beyond q_max.
double prime_route_tail(const ExpansionParams& params, const PrimeTable& primes, std::int64_t q_max);

/// d^^_k = (1/beta) [sum_rho B((alpha - rho)/beta, k+1)/rho
/// - sum_n B((alpha + 2n)/beta, k+1)/(2n) + C B(alpha/beta, k+1)], C = ln(2 pi) - 1.
/// `asymptotic` switches to Gamma(a) k^-a and then needs k >= 1; the exact
/// form also accepts k = 0.
HComplex compute_dhathat(const ExpansionParams& params, const HReal& k, const ZeroTable& zeros,
                         std::int64_t n_trivial, const PrecisionContext& ctx, bool asymptotic = false);

/// s_k = (1/beta) B((alpha - 1)/beta, k + 1). Needs real alpha > 1, beta > 0.
HReal compute_s(const ExpansionParams& params, std::int64_t k, const PrecisionContext& ctx);

/// s_0..s_k_max in closed form.
CoefficientSeries compute_s_series(const ExpansionParams& params, std::int64_t k_max, const PrecisionContext& ctx);

/// s_0..s_k_max as the binomial transform of 1/(alpha + beta j - 1).
CoefficientSeries compute_s_binomial(const ExpansionParams& params, std::int64_t k_max,
                                     const PrecisionContext& ctx);

}  // namespace pochzeta
