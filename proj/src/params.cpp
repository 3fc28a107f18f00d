#include "pochzeta/params.hpp"

#include "pochzeta/errors.hpp"

namespace pochzeta {

void ExpansionParams::require_nonzero_beta() const {
  if (beta.is_zero()) throw DomainError("beta must be nonzero");
}

void ExpansionParams::require_real_family() const {
  if (!alpha.is_real() || !(alpha.re > 1L)) throw DomainError("alpha must be real and > 1");
  if (!beta.is_real() || !(beta.re > 0L)) throw DomainError("beta must be real and > 0");
}

HComplex ExpansionParams::shifted(const HComplex& s) const {
  require_nonzero_beta();
  return (s - alpha) / beta + 1L;
}

HComplex ExpansionParams::node(long j) const { return alpha + beta * j; }

ExpansionParams make_params(double alpha, double beta, double sigma, Bits bits) {
  return {HComplex(HReal(alpha, bits)), HComplex(HReal(beta, bits)), HReal(sigma, bits)};
}

}  // namespace pochzeta
