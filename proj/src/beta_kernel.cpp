#include "beta_kernel.hpp"

#include "pochzeta/errors.hpp"
#include "pochzeta/special.hpp"
#include "special_tables.hpp"

namespace pochzeta::detail {

namespace {
constexpr long kProductBetaLimit = 63;
}

BetaKernel::BetaKernel(const HReal& k, const PrecisionContext& ctx, bool asymptotic)
    : k_(k), ctx_(ctx), asymptotic_(asymptotic), digits_(ctx.working_digits() + 2) {
  if (!(k > 0L) && !(k == 0L && !asymptotic)) throw DomainError("k must be positive");
  small_integer_ = k.is_integer() && k <= kProductBetaLimit;
  const Bits bits = PrecisionContext::digits_to_bits(digits_ + 3);
  if (asymptotic_) {
    log_k_ = log(k.rounded(std::max(bits, k.precision())));
  } else if (!small_integer_) {
    log_gamma_k1_ = log_gamma_real(k.rounded(std::max(bits, k.precision())) + 1L, digits_);
  }
}

HComplex BetaKernel::operator()(const HComplex& a) const {
  if (a.is_real() && a.re.is_integer() && !(a.re > 0L)) {
    throw DomainError("Gamma pole at a = " + a.re.to_string(17));
  }
  HComplex out(ctx_.bits());
  if (asymptotic_) {
    out = exp(log_gamma(a, digits_) - a * log_k_);
  } else if (small_integer_) {
    out = eval_beta(a, HComplex(k_ + 1L), ctx_);
  } else {
    const HReal k1 = k_.rounded(log_gamma_k1_.precision()) + 1L;
    out = exp(log_gamma(a, digits_) + HComplex(log_gamma_k1_) - log_gamma(a + k1, digits_));
  }
  out = out.rounded(ctx_.bits());
  if (a.is_real()) out.im = HReal(ctx_.bits());
  return out;
}

}  // namespace pochzeta::detail
