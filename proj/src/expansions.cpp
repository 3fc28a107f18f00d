#include "pochzeta/expansions.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "pochzeta/errors.hpp"
#include "pochzeta/special.hpp"

namespace pochzeta {

namespace {

bool is_real_one(const HComplex& s) { return s.is_real() && s.re == 1L; }

CoefficientSeries build_coefficients(SeriesTarget target, ExpansionParams& params, std::int64_t K,
                                     const PrecisionContext& ctx, const SeriesOptions& opts) {
  switch (target) {
    case SeriesTarget::ETA_FACTOR: return compute_b(params, K, ctx);
    case SeriesTarget::MASLANKA: {
      CoefficientSeries c = compute_maslanka_A(K, ctx);
      c.params.sigma = params.sigma;
      params = c.params;
      return c;
    }
    case SeriesTarget::LOG_ETA: return compute_d(params, K, ctx);
    case SeriesTarget::LOG_DERIV: return compute_dhat_binomial(params, K, ctx);
    case SeriesTarget::F_FUNCTION: {
      if (opts.zeros == nullptr) throw DomainError("F_FUNCTION needs a zero table");
      CoefficientSeries c;
      c.kind = CoefficientKind::DHATHAT;
      c.route = CoefficientRoute::ZerosBeta;
      c.params = params;
      c.ctx = ctx;
      for (std::int64_t k = 0; k <= K; ++k) {
        c.values.push_back(compute_dhathat(params, HReal(k, ctx.bits()), *opts.zeros, opts.n_trivial, ctx));
      }
      return c;
    }
    case SeriesTarget::INV_S_MINUS_1: return compute_s_series(params, K, ctx);
  }
  throw DomainError("unknown series target");
}

}  // namespace

std::string to_string(SeriesTarget target) {
  switch (target) {
    case SeriesTarget::ETA_FACTOR: return "ETA_FACTOR";
    case SeriesTarget::MASLANKA: return "MASLANKA";
    case SeriesTarget::LOG_ETA: return "LOG_ETA";
    case SeriesTarget::LOG_DERIV: return "LOG_DERIV";
    case SeriesTarget::F_FUNCTION: return "F_FUNCTION";
    case SeriesTarget::INV_S_MINUS_1: return "INV_S_MINUS_1";
  }
  return "?";
}

SeriesTarget parse_series_target(const std::string& name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return c == '-' ? '_' : static_cast<char>(std::toupper(c)); });
  for (const SeriesTarget t : {SeriesTarget::ETA_FACTOR, SeriesTarget::MASLANKA, SeriesTarget::LOG_ETA,
                               SeriesTarget::LOG_DERIV, SeriesTarget::F_FUNCTION, SeriesTarget::INV_S_MINUS_1}) {
    if (to_string(t) == upper) return t;
  }
  throw DomainError("unknown series target '" + name + "'");
}

std::optional<HReal> SeriesEvaluation::abs_error() const {
  if (!direct_value) return std::nullopt;
  return abs(partial_sum - *direct_value);
}

std::optional<HComplex> direct_target_value(SeriesTarget target, const HComplex& s, const PrecisionContext& ctx) {
  const Bits bits = ctx.bits();
  switch (target) {
    case SeriesTarget::ETA_FACTOR: return eval_eta_factor_continued(s, ctx);
    case SeriesTarget::MASLANKA:
      if (is_real_one(s)) return HComplex(HReal(1, bits));
      return ((s - 1L) * eval_zeta_continued(s, ctx)).rounded(bits);
    case SeriesTarget::LOG_ETA: {
      const HComplex v = eval_eta_factor_continued(s, ctx);
      if (v.is_real()) {
        if (!(v.re > 0L)) return std::nullopt;
        return HComplex(log(v.re));
      }
      return log(v);
    }
    case SeriesTarget::LOG_DERIV:
      if (!s.is_real() || !(s.re > 1L)) return std::nullopt;
      return HComplex(eval_log_zeta_deriv(s.re, ctx));
    case SeriesTarget::F_FUNCTION:
      if (!s.is_real() || !(s.re > 1L)) return std::nullopt;
      return HComplex(eval_log_zeta_deriv(s.re, ctx) / s.re);
    case SeriesTarget::INV_S_MINUS_1:
      if (is_real_one(s)) return std::nullopt;
      return (1L / (s.rounded(bits) - 1L)).rounded(bits);
  }
  return std::nullopt;
}

SeriesExpansion::SeriesExpansion(SeriesTarget target, const ExpansionParams& params, std::int64_t K,
                                 const PrecisionContext& ctx, const SeriesOptions& opts)
    : target_(target), params_(params), K_(K), ctx_(ctx) {
  if (K < 0) throw DomainError("K must be >= 0");
  params_.require_nonzero_beta();
  coeffs_ = build_coefficients(target, params_, K, ctx, opts);
}

SeriesEvaluation SeriesExpansion::evaluate(const HComplex& s, std::int64_t K) const {
  if (K < 0) K = K_;
  if (K > K_) throw DomainError("requested order exceeds the computed coefficients");
  const Bits bits = ctx_.bits();
  SeriesEvaluation ev;
  ev.target = target_;
  ev.params = params_;
  ev.K = K;
  ev.s = s.rounded(std::max(bits, s.precision()));

  // P_k(z) = P_(k-1)(z) (1 - z/k), summed in ascending k.
  const HComplex z = params_.shifted(ev.s);
  HComplex p(HReal(1, bits), HReal(bits));
  HComplex sum(bits);
  for (std::int64_t k = 0; k <= K; ++k) {
    if (k > 0) p *= (1L - z / static_cast<long>(k));
    const HComplex term = coeffs_.values[static_cast<std::size_t>(k)] * p;
    if (!term.is_zero()) ev.last_nonzero_k = k;
    sum += term;
  }
  ev.partial_sum = sum;
  ev.direct_value = direct_target_value(target_, ev.s, ctx_);
  return ev;
}

SeriesEvaluation eval_series(SeriesTarget target, const ExpansionParams& params, std::int64_t K, const HComplex& s,
                             const PrecisionContext& ctx, const SeriesOptions& opts) {
  return SeriesExpansion(target, params, K, ctx, opts).evaluate(s);
}

std::vector<SeriesEvaluation> eval_critical_line_series(std::int64_t K_low, std::int64_t K_high,
                                                        const std::vector<HReal>& t_grid,
                                                        const PrecisionContext& ctx) {
  if (K_low < 0 || K_high < 0) throw DomainError("orders must be >= 0");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (t_grid[i] < 0L || t_grid[i] > 40L) throw DomainError("t must lie in [0, 40]");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) throw DomainError("t grid must be ascending");
  }
  const Bits bits = ctx.bits();
  const ExpansionParams params{HComplex(HReal(0.5, bits)), HComplex(HReal(bits), HReal(1, bits)), HReal(0.5, bits)};
  const SeriesExpansion series(SeriesTarget::ETA_FACTOR, params, std::max(K_low, K_high), ctx);
  std::vector<SeriesEvaluation> out;
  out.reserve(t_grid.size());
  for (const HReal& t : t_grid) {
    const std::int64_t K = t <= kCriticalLineSplit ? K_low : K_high;
    out.push_back(series.evaluate(HComplex(HReal(0.5, bits), t.rounded(std::max(bits, t.precision()))), K));
  }
  return out;
}

void write_series_csv(std::ostream& out, const std::vector<SeriesEvaluation>& rows, const std::string& axis,
                      int digits) {
  out << axis << ",K,sum_re,sum_im,direct_re,direct_im,abs_error\n";
  for (const auto& r : rows) {
    const HReal& x = axis == "t" ? r.s.im : r.s.re;
    out << x.to_string(digits) << ',' << r.K << ',' << r.partial_sum.re.to_string(digits) << ','
        << r.partial_sum.im.to_string(digits) << ',';
    if (r.direct_value) {
      out << r.direct_value->re.to_string(digits) << ',' << r.direct_value->im.to_string(digits) << ','
          << r.abs_error()->to_string(digits);
    } else {
      out << "nan,nan,nan";
    }
    out << '\n';
  }
}

}  // namespace pochzeta
