#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "pochzeta/hcomplex.hpp"
#include "pochzeta/params.hpp"
#include "pochzeta/precision.hpp"
#include "pochzeta/primes.hpp"
#include "pochzeta/zeros.hpp"

namespace pochzeta {

/// One grid point of a critical-function sweep; k = e^x.
struct CriticalSample {
  HReal x;
  HReal k;
  HReal psi1;
  HReal psi2;
  HReal diff;
};

struct CriticalOptions {
  std::int64_t n_zeros = 10;
  std::int64_t n_trivial = 20;
  std::int64_t q_max = 50;
  /// exp(-k p^-beta q) in the prime sum.
  bool approx_paper = false;
  /// Gamma(a) k^-a in place of B(a, k + 1) in both routes.
  bool asymptotic = false;
};

/// Defaults of the critical-function experiment: alpha = 9/2, beta = 4, sigma = 1/2.
ExpansionParams critical_default_params(Bits bits);

/// k^((alpha - sigma)/beta) d^_k from the zeros route, k = e^x, before
/// discarding the imaginary part left over by rounding.
HComplex psi1_complex(const HReal& x, const ExpansionParams& params, const ZeroTable& zeros, std::int64_t n_zeros,
                      std::int64_t n_trivial, const PrecisionContext& ctx, bool asymptotic = false);

/// Real part of psi1_complex. Throws DomainError if n_zeros exceeds the table.
HReal psi1(const HReal& x, const ExpansionParams& params, const ZeroTable& zeros, std::int64_t n_zeros,
           std::int64_t n_trivial, const PrecisionContext& ctx, bool asymptotic = false);

/// k^((alpha - sigma)/beta) d^_k from the primes route, k = e^x.
HReal psi2(const HReal& x, const ExpansionParams& params, const PrimeTable& primes, std::int64_t q_max,
           bool approx_paper, const PrecisionContext& ctx, bool asymptotic = false);

struct SweepSummary {
  double max_diff = 0.0;
  double mean_psi1 = 0.0;
  /// Sign changes of psi1 - mean(psi1) along the grid.
  int sign_changes = 0;
  /// Interior local maxima of psi1.
  int local_maxima = 0;
  /// Median of |consecutive extremum difference| / 2.
  double amplitude = 0.0;
};

struct CriticalSweep {
  std::vector<CriticalSample> samples;
  SweepSummary summary;
};

/// Uniform grid of n_points in [x_min, x_max]. Throws DomainError on
/// x_min >= x_max or n_points < 2.
CriticalSweep sweep_critical(double x_min, double x_max, int n_points, const ExpansionParams& params,
                             const ZeroTable& zeros, const PrimeTable& primes, const CriticalOptions& opts,
                             const PrecisionContext& ctx);

SweepSummary summarize_sweep(const std::vector<CriticalSample>& samples);

/// -k^((alpha - sigma)/beta) ln p sum_q p^-alpha q (1 - p^-beta q)^k at k = e^x:
/// the term of psi2 belonging to one prime. Throws DomainError if p is not prime.
std::vector<std::pair<HReal, HReal>> prime_contribution(std::uint64_t p, const std::vector<HReal>& x_grid,
                                                        const ExpansionParams& params, std::int64_t q_max,
                                                        const PrecisionContext& ctx, bool approx_paper = false);

/// |sum_rho k^-((sigma - rho)/beta) / (rho (alpha - rho))
///  - sum_n k^-((sigma + 2n)/beta) / (2n (alpha + 2n)) + (C/alpha) k^(-sigma/beta)|
/// with rho = 1/2 +- i t_j over the first n_zeros ordinates. Throws
/// DomainError when a denominator vanishes.
HReal psi_infbeta(const HReal& k, const ExpansionParams& params, const ZeroTable& zeros, std::int64_t n_zeros,
                  std::int64_t n_trivial, const PrecisionContext& ctx);

/// The beta -> infinity value of psi_infbeta, every k-power replaced by 1.
HReal psi_infbeta_limit(const HReal& alpha, const ZeroTable& zeros, std::int64_t n_zeros, std::int64_t n_trivial,
                        const PrecisionContext& ctx);

/// sum_{n <= n_trivial} 1 / (2n (alpha + 2n)).
HReal trivial_zero_sum(const HReal& alpha, std::int64_t n_trivial, const PrecisionContext& ctx);

/// (1/alpha) (1/(alpha - 1) + zeta'(alpha)/zeta(alpha)); tends to Euler's
/// gamma as alpha -> 1+. Throws DomainError for alpha <= 1.
HReal gamma_limit_primes(const HReal& alpha, const PrecisionContext& ctx);

/// CSV with columns x,k,psi1,psi2,diff.
void write_critical_csv(std::ostream& out, const std::vector<CriticalSample>& samples, int digits);

}  // namespace pochzeta
