#pragma once

#include "pochzeta/hcomplex.hpp"
#include "pochzeta/hreal.hpp"

namespace pochzeta {

/// Expansion parameters alpha, beta and the evaluation line Re(s) = sigma.
struct ExpansionParams {
  HComplex alpha;
  HComplex beta;
  HReal sigma;

  /// Throws DomainError if beta = 0.
  void require_nonzero_beta() const;
  /// Throws DomainError unless alpha is real > 1 and beta is real > 0.
  void require_real_family() const;

  /// (s - alpha)/beta + 1
  HComplex shifted(const HComplex& s) const;
  /// alpha + beta j
  HComplex node(long j) const;
};

/// Real parameters from machine numbers.
ExpansionParams make_params(double alpha, double beta, double sigma, Bits bits);

}  // namespace pochzeta
