#pragma once

// Precision-dependent coefficient tables shared by the special functions.
// Each table is computed once per key and then only read.

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "pochzeta/hcomplex.hpp"
#include "pochzeta/hreal.hpp"

namespace pochzeta::detail {

/// Weights w_k (k < n) with sum_k (-1)^k a_k ~ sum_k w_k a_k for totally
/// monotone a_k; error below 2 * 5.83^-n times the total variation of the
/// underlying measure.
std::shared_ptr<const std::vector<HReal>> alternating_weights(long n, Bits bits);

/// T_j = B_2j / (2j)! for j = 0..count-1 as exact rationals.
std::shared_ptr<const std::vector<mpq_class>> bernoulli_over_factorial(long count);

/// Spouge coefficients c_0..c_{a-1} for parameter a.
std::shared_ptr<const std::vector<HReal>> spouge_coefficients(long a, Bits bits);

/// Log-Gamma accurate to `digits` in absolute terms, returned at whatever
/// precision that needs (large |z| carries extra bits).
HComplex log_gamma(const HComplex& z, int digits);

/// Real-argument variant; z must not be a pole.
HReal log_gamma_real(const HReal& z, int digits);

}  // namespace pochzeta::detail
