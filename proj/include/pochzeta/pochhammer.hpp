#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pochzeta/hcomplex.hpp"
#include "pochzeta/params.hpp"
#include "pochzeta/precision.hpp"

namespace pochzeta {

/// Degree above which P_k is evaluated as exp(sum of logs of the factors).
inline constexpr std::int64_t kPochhammerLogCrossover = 10'000;

/// P_k(s) = prod_{r=1..k} (1 - s/r). Exactly zero when s is an integer in
/// [1, k]. Throws DomainError for k < 0.
HComplex eval_pochhammer(const HComplex& s, std::int64_t k, const PrecisionContext& ctx);

namespace detail {
HComplex pochhammer_direct(const HComplex& s, std::int64_t k, const PrecisionContext& ctx);
HComplex pochhammer_log(const HComplex& s, std::int64_t k, const PrecisionContext& ctx);
}  // namespace detail

/// P_k((s - alpha)/beta + 1). Throws DomainError if beta = 0.
HComplex eval_pochhammer_shifted(const HComplex& s, const ExpansionParams& params, std::int64_t k,
                                 const PrecisionContext& ctx);

/// Leading large-k behaviour k^-s / Gamma(1 - s); zero for s = 1, 2, ...
/// k need not be an integer.
HComplex pochhammer_asymptotic(const HComplex& s, const HReal& k, const PrecisionContext& ctx);

struct DecayReport {
  std::vector<std::int64_t> k;
  /// |P_k(s)| k^Re(s) per entry of k.
  std::vector<double> scaled;
  /// Largest entry of `scaled`.
  double max_scaled = 0.0;
  /// Running maximum over the last decile exceeds the running maximum at
  /// the 90% point by at most 5%.
  bool stabilizes = true;
};

/// Tabulates |P_k(s)| k^Re(s) over an ascending, nonempty list of k >= 1.
/// Throws DomainError on an empty or unsorted list.
DecayReport check_decay_bound(const HComplex& s, const std::vector<std::int64_t>& k_list,
                              const PrecisionContext& ctx);

/// Both sides of P_k(z + 1) = -z/k P_(k-1)(z) with z = (s - alpha)/beta.
/// Throws DomainError for k < 1 or beta = 0.
std::pair<HComplex, HComplex> pochhammer_step_identity(const HComplex& s, const ExpansionParams& params,
                                                       std::int64_t k, const PrecisionContext& ctx);

}  // namespace pochzeta
