#pragma once

// B(a, k + 1) for many a at one (possibly non-integer) k, sharing
// ln Gamma(k + 1). In asymptotic mode the kernel is Gamma(a) k^-a instead.

#include "pochzeta/hcomplex.hpp"
#include "pochzeta/precision.hpp"

namespace pochzeta::detail {

class BetaKernel {
 public:
  BetaKernel(const HReal& k, const PrecisionContext& ctx, bool asymptotic);

  /// Throws DomainError when a is a pole of Gamma.
  HComplex operator()(const HComplex& a) const;

 private:
  HReal k_;
  PrecisionContext ctx_;
  bool asymptotic_;
  int digits_;
  bool small_integer_;
  HReal log_k_;
  HReal log_gamma_k1_;
};

}  // namespace pochzeta::detail
