#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "pochzeta/critical.hpp"
#include "pochzeta/errors.hpp"
#include "pochzeta/special.hpp"
#include "test_util.hpp"

using namespace pochzeta;
using namespace testutil;

namespace {

const PrecisionContext kCtx(30);
const Bits kBits = kCtx.bits();

const PrimeTable& primes5000() {
  static const PrimeTable table = sieve_primes(PrimeLimit::FirstN, 5000);
  return table;
}

std::vector<HReal> grid(double lo, double hi, int n) {
  std::vector<HReal> out;
  for (int i = 0; i < n; ++i) out.emplace_back(lo + (hi - lo) * i / (n - 1), kBits);
  return out;
}

double peak_x(const std::vector<std::pair<HReal, HReal>>& curve) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (abs(curve[i].second) > abs(curve[best].second)) best = i;
  }
  return curve[best].first.to_double();
}

}  // namespace

TEST_CASE("default critical parameters") {
  const ExpansionParams p = critical_default_params(kBits);
  CHECK(p.alpha == HComplex(HReal(9, kBits) / 2L));
  CHECK(p.beta == HComplex(HReal(4, kBits)));
  CHECK(p.sigma == HReal(1, kBits) / 2L);
}

TEST_CASE("psi2 matches mpmath") {
  const ExpansionParams p = critical_default_params(kBits);
  for (const auto& [x, value] : oracles::kPsi2) {
    CAPTURE(std::string(x));
    CHECK(err(psi2(R(x, kBits), p, primes5000(), 50, false, kCtx), R(value, kBits)) < tol(28));
  }
  ExpansionParams bad = p;
  bad.alpha = HComplex(HReal(1, kBits));
  CHECK_THROWS_AS(psi2(R("5", kBits), bad, primes5000(), 50, false, kCtx), DomainError);
}

TEST_CASE("psi1 is real and tracks psi2") {
  const ExpansionParams p = critical_default_params(kBits);
  const ZeroTable zeros = bundled_zeros(10);
  for (const char* x : {"2.5", "15", "30"}) {
    CAPTURE(std::string(x));
    const HComplex c = psi1_complex(R(x, kBits), p, zeros, 10, 20, kCtx);
    CHECK(abs(c.im) < tol(30));
    CHECK(psi1(R(x, kBits), p, zeros, 10, 20, kCtx) == c.re);
  }
  const HReal x(15, kBits);
  const double a = psi1(x, p, zeros, 10, 20, kCtx).to_double();
  const double b = psi2(x, p, primes5000(), 50, false, kCtx).to_double();
  MESSAGE("x = 15: psi1 = ", a, ", psi2 = ", b);
  CHECK(std::abs(a - b) < 0.002);
  // Within the oscillation band around the mean.
  CHECK(std::abs(a) < 0.05);
  CHECK_THROWS_AS(psi1(x, p, zeros, 11, 20, kCtx), DomainError);
}

TEST_CASE("trivial zeros barely move psi1 at x = 15") {
  const ExpansionParams p = critical_default_params(kBits);
  const ZeroTable zeros = bundled_zeros(10);
  const HReal x(15, kBits);
  const HReal none = psi1(x, p, zeros, 10, 0, kCtx);
  const HReal one = psi1(x, p, zeros, 10, 1, kCtx);
  const HReal twenty = psi1(x, p, zeros, 10, 20, kCtx);
  MESSAGE("first trivial term at x = 15: ", abs(one - none).to_double());
  CHECK(abs(one - none) < 1e-4);
  CHECK(abs(twenty - none) < 1e-4);
  CHECK_FALSE(abs(one - none).is_zero());
}

TEST_CASE("first term of psi2 at x = 0") {
  // psi2 minus every prime contribution leaves the s_k term, Gamma(7/8)/4 at k = 1 in the asymptotic form.
  const ExpansionParams p = critical_default_params(kBits);
  const PrimeTable primes = sieve_primes(PrimeLimit::FirstN, 100);
  const HReal x(0, kBits);
  for (const bool asymptotic : {true, false}) {
    CAPTURE(asymptotic);
    HReal first = psi2(x, p, primes, 50, false, kCtx, asymptotic);
    for (const std::uint64_t q : primes.primes) first -= prime_contribution(q, {x}, p, 50, kCtx).front().second;
    const HReal want = asymptotic ? eval_gamma(HComplex(HReal(7, kBits) / 8L), kCtx).re / 4L
                                  : eval_beta(HComplex(HReal(7, kBits) / 8L), HComplex(HReal(2, kBits)), kCtx).re / 4L;
    CHECK(err(first, want) < tol(28));
  }
  MESSAGE("Gamma(7/8)/4 = ", (eval_gamma(HComplex(HReal(7, kBits) / 8L), kCtx).re / 4L).to_double());
}

TEST_CASE("sweep grid and errors") {
  const ExpansionParams p = critical_default_params(kBits);
  const ZeroTable zeros = bundled_zeros(10);
  const PrimeTable primes = sieve_primes(PrimeLimit::FirstN, 50);
  CriticalOptions opts;
  opts.q_max = 10;
  const CriticalSweep sweep = sweep_critical(2.5, 30.0, 2, p, zeros, primes, opts, kCtx);
  REQUIRE(sweep.samples.size() == 2);
  CHECK(sweep.samples[0].x == HReal(2.5, kBits));
  CHECK(abs(sweep.samples[1].x - HReal(30, kBits)) < tol(35));
  for (const auto& c : sweep.samples) {
    CHECK(err(c.k, exp(c.x)) < tol(35));
    CHECK(c.diff == c.psi1 - c.psi2);
  }
  CHECK_THROWS_AS(sweep_critical(3.0, 3.0, 10, p, zeros, primes, opts, kCtx), DomainError);
  CHECK_THROWS_AS(sweep_critical(5.0, 3.0, 10, p, zeros, primes, opts, kCtx), DomainError);
  CHECK_THROWS_AS(sweep_critical(2.5, 30.0, 1, p, zeros, primes, opts, kCtx), DomainError);
  opts.n_zeros = 11;
  CHECK_THROWS_AS(sweep_critical(2.5, 30.0, 2, p, zeros, primes, opts, kCtx), DomainError);
}

TEST_CASE("sweep summary on a synthetic signal") {
  std::vector<CriticalSample> samples;
  const int n = 601;
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i) {
    const double x = 0.5 + 6.0 * pi * i / (n - 1);
    CriticalSample c;
    c.x = HReal(x, kBits);
    c.psi1 = HReal(0.01 * std::sin(x), kBits);
    c.psi2 = HReal(0.01 * std::sin(x) + (i == 300 ? 0.003 : 0.0), kBits);
    c.diff = c.psi1 - c.psi2;
    samples.push_back(c);
  }
  const SweepSummary s = summarize_sweep(samples);
  CHECK(s.sign_changes == 6);
  CHECK(s.local_maxima == 3);
  CHECK(s.amplitude == doctest::Approx(0.01).epsilon(1e-3));
  CHECK(s.max_diff == doctest::Approx(0.003));
  CHECK(std::abs(s.mean_psi1) < 1e-3);
  CHECK(summarize_sweep({}).sign_changes == 0);
}

TEST_CASE("prime contributions move right with p") {
  const ExpansionParams p = critical_default_params(kBits);
  const std::vector<HReal> xs = grid(0.0, 40.0, 401);
  double previous = -1.0;
  for (const std::uint64_t q : {2, 29, 229, 541}) {
    const double peak = peak_x(prime_contribution(q, xs, p, 100, kCtx));
    MESSAGE("p = ", q, ": peak at x = ", peak);
    CHECK(peak > previous);
    previous = peak;
  }
  // The envelope decays like e^(-x/8) once the q = 1 bump has passed.
  const auto near = prime_contribution(29, xs, p, 100, kCtx);
  const auto far = prime_contribution(29, grid(60.0, 70.0, 41), p, 100, kCtx);
  double peak_value = 0.0;
  for (const auto& [x, v] : near) peak_value = std::max(peak_value, abs(v).to_double());
  for (const auto& [x, v] : far) CHECK(abs(v).to_double() < 0.05 * peak_value);
  CHECK_THROWS_AS(prime_contribution(30, xs, p, 100, kCtx), DomainError);
  CHECK_THROWS_AS(prime_contribution(1, xs, p, 100, kCtx), DomainError);
}

TEST_CASE("infinite-beta limit matches mpmath") {
  const ZeroTable zeros = bundled_zeros();
  const HReal one(1, kBits);
  const HReal limit = psi_infbeta_limit(one, zeros, 100, 1000, kCtx);
  CHECK(err(limit, R(oracles::kInfBetaLimit[0].value, kBits)) < tol(28));
  const HReal gamma = R(oracles::kEulerGamma, kBits);
  MESSAGE("100 zeros: |psi - gamma| = ", abs(limit - gamma).to_double());

  // Finite but huge beta approaches the symbolic limit.
  const ExpansionParams p{HComplex(one), HComplex(HReal(1000000, kBits)), HReal(0.5, kBits)};
  const HReal k = exp(HReal(15, kBits));
  const HReal finite = psi_infbeta(k, p, zeros, 100, 1000, kCtx);
  MESSAGE("beta = 1e6: |psi - limit| = ", abs(finite - limit).to_double());
  CHECK(abs(finite - limit) < 1e-4);
  CHECK_THROWS_AS(psi_infbeta(HReal(0, kBits), p, zeros, 100, 1000, kCtx), DomainError);
}

TEST_CASE("residual shrinks as zeros are added") {
  const ZeroTable zeros = bundled_zeros();
  const HReal gamma = R(oracles::kEulerGamma, kBits);
  double previous = 1.0;
  for (std::int64_t n = 20; n <= 100; n += 20) {
    const double r = abs(psi_infbeta_limit(HReal(1, kBits), zeros, n, 100000, kCtx) - gamma).to_double();
    CAPTURE(n);
    CHECK(r < previous);
    previous = r;
  }
}

TEST_CASE("trivial-zero sum tends to 1 - ln 2") {
  const HReal target = R(oracles::kOneMinusLn2, kBits);
  const HReal one(1, kBits);
  CHECK(trivial_zero_sum(one, 0, kCtx).is_zero());
  CHECK(trivial_zero_sum(one, 1, kCtx) == one / 6L);
  for (std::int64_t n : {100, 1000, 10000}) {
    const double e1 = abs(target - trivial_zero_sum(one, n, kCtx)).to_double();
    const double e2 = abs(target - trivial_zero_sum(one, 2 * n, kCtx)).to_double();
    CAPTURE(n);
    // The tail is about 1/(4n).
    CHECK(e1 * 4.0 * static_cast<double>(n) == doctest::Approx(1.0).epsilon(0.02));
    CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.01));
  }
  CHECK_THROWS_AS(trivial_zero_sum(one, -1, kCtx), DomainError);
  CHECK_THROWS_AS(trivial_zero_sum(HReal(-4, kBits), 5, kCtx), DomainError);
}

TEST_CASE("prime-side gamma limit") {
  CHECK_THROWS_AS(gamma_limit_primes(HReal(1, kBits), kCtx), DomainError);
  CHECK_THROWS_AS(gamma_limit_primes(HReal(0.5, kBits), kCtx), DomainError);
  const HReal two(2, kBits);
  CHECK(err(gamma_limit_primes(two, kCtx), eval_log_zeta_deriv(two, kCtx) / 2L) < tol(30));
  const double gamma = R(oracles::kEulerGamma, kBits).to_double();
  double previous = 0.0;
  for (const char* a : {"2", "1.5", "1.1", "1.01", "1.001"}) {
    const double v = gamma_limit_primes(R(a, kBits), kCtx).to_double();
    MESSAGE("alpha = ", std::string(a), ": ", v);
    CHECK(v > previous);
    CHECK(v < gamma);
    previous = v;
  }
  CHECK(std::abs(gamma_limit_primes(R("1.01", kBits), kCtx).to_double() - gamma) < 0.01);
}

TEST_CASE("critical CSV") {
  std::vector<CriticalSample> samples(1);
  samples[0].x = HReal(1, kBits);
  samples[0].k = exp(samples[0].x);
  samples[0].psi1 = HReal(0.5, kBits);
  samples[0].psi2 = HReal(0.25, kBits);
  samples[0].diff = samples[0].psi1 - samples[0].psi2;
  std::ostringstream out;
  write_critical_csv(out, samples, 6);
  CHECK(out.str().rfind("x,k,psi1,psi2,diff\n", 0) == 0);
  CHECK(out.str().find("2.71828") != std::string::npos);
}
