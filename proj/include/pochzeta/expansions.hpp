#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pochzeta/coefficients.hpp"
#include "pochzeta/hcomplex.hpp"
#include "pochzeta/params.hpp"
#include "pochzeta/precision.hpp"
#include "pochzeta/zeros.hpp"

namespace pochzeta {

/// Function reconstructed by a Pochhammer series and its coefficients:
///   ETA_FACTOR     (1 - 2^(1-s)) zeta(s)          b_k
///   MASLANKA       (s - 1) zeta(s), P_k(s/2)      A_k
///   LOG_ETA        ln((1 - 2^(1-s)) zeta(s))      d_k
///   LOG_DERIV      1/(s-1) + zeta'(s)/zeta(s)     d^_k
///   F_FUNCTION     (zeta'(s)/zeta(s) + 1/(s-1))/s d^^_k (zeros route)
///   INV_S_MINUS_1  1/(s - 1)                      s_k
enum class SeriesTarget { ETA_FACTOR, MASLANKA, LOG_ETA, LOG_DERIV, F_FUNCTION, INV_S_MINUS_1 };

std::string to_string(SeriesTarget target);
/// Accepts the names above in any case. Throws DomainError otherwise.
SeriesTarget parse_series_target(const std::string& name);

struct SeriesEvaluation {
  SeriesTarget target = SeriesTarget::ETA_FACTOR;
  ExpansionParams params;
  std::int64_t K = 0;
  HComplex s;
  HComplex partial_sum;
  /// Empty where the target has no independent evaluation at s.
  std::optional<HComplex> direct_value;
  /// Largest k with a nonzero term c_k P_k, -1 if every term vanishes.
  std::int64_t last_nonzero_k = -1;

  /// |partial_sum - direct_value|, empty without a direct value.
  std::optional<HReal> abs_error() const;
};

/// Extra inputs for F_FUNCTION (zero table and trivial-zero count).
struct SeriesOptions {
  const ZeroTable* zeros = nullptr;
  std::int64_t n_trivial = 20;
};

/// Coefficients c_0..c_K of one representation, evaluated at many points.
class SeriesExpansion {
 public:
  /// Computes the coefficients. Errors are those of the coefficient routines,
  /// including PrecisionError when ctx has too few guard digits for K.
  SeriesExpansion(SeriesTarget target, const ExpansionParams& params, std::int64_t K, const PrecisionContext& ctx,
                  const SeriesOptions& opts = {});

  SeriesTarget target() const noexcept { return target_; }
  const ExpansionParams& params() const noexcept { return params_; }
  const CoefficientSeries& coefficients() const noexcept { return coeffs_; }
  std::int64_t max_order() const noexcept { return K_; }

  /// Partial sum up to order K (<= max_order(), default all) plus the direct value.
  SeriesEvaluation evaluate(const HComplex& s, std::int64_t K = -1) const;

 private:
  SeriesTarget target_;
  ExpansionParams params_;
  std::int64_t K_;
  PrecisionContext ctx_;
  CoefficientSeries coeffs_;
};

/// Direct value of the target at s, or empty where none is available.
std::optional<HComplex> direct_target_value(SeriesTarget target, const HComplex& s, const PrecisionContext& ctx);

/// One-shot evaluation.
SeriesEvaluation eval_series(SeriesTarget target, const ExpansionParams& params, std::int64_t K, const HComplex& s,
                             const PrecisionContext& ctx, const SeriesOptions& opts = {});

/// alpha = 1/2, beta = i on s = 1/2 + it: order K_low for t <= 18 and K_high
/// above. The direct value is (1 - 2^(1/2 - it)) zeta(1/2 + it). t_grid must
/// be ascending within [0, 40] (DomainError otherwise).
std::vector<SeriesEvaluation> eval_critical_line_series(std::int64_t K_low, std::int64_t K_high,
                                                        const std::vector<HReal>& t_grid,
                                                        const PrecisionContext& ctx);

inline constexpr double kCriticalLineSplit = 18.0;

/// CSV with columns <axis>,K,sum_re,sum_im,direct_re,direct_im,abs_error.
/// The axis value is Im(s) for axis "t" and Re(s) otherwise. Missing direct
/// values are written as nan.
void write_series_csv(std::ostream& out, const std::vector<SeriesEvaluation>& rows, const std::string& axis,
                      int digits);

}  // namespace pochzeta
