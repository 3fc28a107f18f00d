#pragma once

#include "pochzeta/hcomplex.hpp"
#include "pochzeta/hreal.hpp"
#include "pochzeta/precision.hpp"

namespace pochzeta {

// Special functions used by every other module. All of them are pure; the
// only shared state is an internal, lock-protected memo of precision
// dependent coefficient tables.
//
// Results are returned at ctx.bits() and are accurate to ctx.working_digits()
// (absolute error below 10^-working * max(1, |value|)), which is what the
// binomial transforms downstream rely on.

/// zeta(s) for Re(s) > 0, s != 1. Throws PoleAtOne at s = 1, DomainError for
/// Re(s) <= 0.
HComplex eval_zeta(const HComplex& s, const PrecisionContext& ctx);

/// (1 - 2^(1-s)) zeta(s) = sum (-1)^(n-1) n^-s for Re(s) > 0. Throws
/// DomainError for Re(s) <= 0. Regular at s = 1, where it equals ln 2.
HComplex eval_eta_factor(const HComplex& s, const PrecisionContext& ctx);

/// zeta(s) for every s != 1, continuing to Re(s) <= 0 by Euler-Maclaurin.
HComplex eval_zeta_continued(const HComplex& s, const PrecisionContext& ctx);

/// (1 - 2^(1-s)) zeta(s) for every s.
HComplex eval_eta_factor_continued(const HComplex& s, const PrecisionContext& ctx);

/// Gamma(z). Throws PoleError at z = 0, -1, -2, ...
HComplex eval_gamma(const HComplex& z, const PrecisionContext& ctx);

/// A logarithm of Gamma(z); exp() of it is Gamma(z). The imaginary part is
/// not normalised to the principal branch.
HComplex eval_log_gamma(const HComplex& z, const PrecisionContext& ctx);

/// B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y). Throws PoleError if x, y or
/// x + y is a pole of Gamma.
HComplex eval_beta(const HComplex& x, const HComplex& y, const PrecisionContext& ctx);

/// d/da ln((a - 1) zeta(a)) = 1/(a-1) + zeta'(a)/zeta(a) for real a > 1.
/// Throws DomainError for a <= 1.
HReal eval_log_zeta_deriv(const HReal& a, const PrecisionContext& ctx);

/// zeta'(0)/zeta(0) - 1 = ln(2 pi) - 1.
HReal zeta_log_derivative_constant(const PrecisionContext& ctx);

namespace detail {

/// Accelerated alternating series for the eta factor (Cohen, Rodriguez
/// Villegas and Zagier weights), accurate to `digits`.
HComplex eta_accelerated(const HComplex& s, int digits, Bits out_bits);

/// Euler-Maclaurin summation of zeta(s) for any s != 1, accurate to `digits`.
HComplex zeta_euler_maclaurin(const HComplex& s, int digits, Bits out_bits);

/// 1/(a-1) + zeta'/zeta(a) by the truncated prime-power series. Returns a NaN
/// HReal when the truncation point would exceed `max_prime`.
HReal log_zeta_deriv_primes(const HReal& a, int digits, Bits out_bits, unsigned long max_prime);

/// 1/(a-1) + zeta'/zeta(a) through eta'(a)/eta(a) with accelerated sums.
HReal log_zeta_deriv_alternating(const HReal& a, int digits, Bits out_bits);

/// Largest prime cutoff the prime-power route is allowed to use.
inline constexpr unsigned long kLogDerivPrimeCap = 20000;

/// Prime cutoff P with 2 P^(1-a) (ln P/(a-1) + 1/(a-1)^2) < 10^-digits, or
/// 0 when it exceeds `cap`.
unsigned long log_deriv_prime_cutoff(double a, int digits, unsigned long cap);

}  // namespace detail
}  // namespace pochzeta
