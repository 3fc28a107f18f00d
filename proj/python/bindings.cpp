#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pochzeta/coefficients.hpp"
#include "pochzeta/critical.hpp"
#include "pochzeta/errors.hpp"
#include "pochzeta/expansions.hpp"
#include "pochzeta/pochhammer.hpp"
#include "pochzeta/primes.hpp"
#include "pochzeta/special.hpp"
#include "pochzeta/zeros.hpp"

namespace py = pybind11;
using namespace pochzeta;

namespace {

// Strings are parsed exactly ("0.1", "i", "1+2i"); Python numbers are taken
// at their binary value.
HComplex to_complex(const py::object& v, Bits bits) {
  if (py::isinstance<py::str>(v)) return HComplex::parse(v.cast<std::string>(), bits);
  if (py::isinstance<py::bool_>(v)) throw py::type_error("expected a number or a string");
  if (py::isinstance<py::int_>(v) || py::isinstance<py::float_>(v)) return HComplex(HReal(v.cast<double>(), bits));
  const auto z = v.cast<std::complex<double>>();
  return {HReal(z.real(), bits), HReal(z.imag(), bits)};
}

HReal to_real(const py::object& v, Bits bits) {
  const HComplex z = to_complex(v, bits);
  if (!z.is_real()) throw DomainError("expected a real value");
  return z.re;
}

ExpansionParams make(const py::object& alpha, const py::object& beta, const py::object& sigma, Bits bits) {
  return {to_complex(alpha, bits), to_complex(beta, bits), to_real(sigma, bits)};
}

std::complex<double> cplx(const HComplex& z) { return z.to_complex(); }

CoefficientKind parse_kind(const std::string& name) {
  for (const auto k : {CoefficientKind::B, CoefficientKind::A, CoefficientKind::D, CoefficientKind::DHAT,
                       CoefficientKind::S}) {
    if (to_string(k) == name) return k;
  }
  throw DomainError("kind must be one of b, A, d, dhat, s");
}

std::vector<std::complex<double>> coefficients(const std::string& kind, const py::object& alpha,
                                               const py::object& beta, std::int64_t K, int digits) {
  const PrecisionContext ctx = PrecisionContext(digits).for_binomial_order(K);
  const ExpansionParams p = make(alpha, beta, py::str("0.5"), ctx.bits());
  CoefficientSeries s;
  switch (parse_kind(kind)) {
    case CoefficientKind::B: s = compute_b(p, K, ctx); break;
    case CoefficientKind::A: s = compute_maslanka_A(K, ctx); break;
    case CoefficientKind::D: s = compute_d(p, K, ctx); break;
    case CoefficientKind::DHAT: s = compute_dhat_binomial(p, K, ctx); break;
    default: s = compute_s_binomial(p, K, ctx); break;
  }
  std::vector<std::complex<double>> out;
  for (const auto& v : s.values) out.push_back(cplx(v));
  return out;
}

py::dict series(const std::string& target, const py::object& s, const py::object& alpha, const py::object& beta,
                std::int64_t K, int digits) {
  const SeriesTarget t = parse_series_target(target);
  const PrecisionContext base(digits);
  const bool binomial = t != SeriesTarget::F_FUNCTION && t != SeriesTarget::INV_S_MINUS_1;
  const PrecisionContext ctx = binomial ? base.for_binomial_order(K) : base;
  const ExpansionParams p = make(alpha, beta, py::str("0.5"), ctx.bits());
  const ZeroTable zeros = bundled_zeros();
  SeriesOptions opts;
  opts.zeros = &zeros;
  const SeriesEvaluation ev = eval_series(t, p, K, to_complex(s, ctx.bits()), ctx, opts);
  py::dict d;
  d["sum"] = cplx(ev.partial_sum);
  d["direct"] = ev.direct_value ? py::cast(cplx(*ev.direct_value)) : py::none();
  d["abs_error"] = ev.direct_value ? py::cast(ev.abs_error()->to_double()) : py::none();
  d["last_nonzero_k"] = ev.last_nonzero_k;
  return d;
}

py::dict sweep(double x_min, double x_max, int n_points, std::int64_t n_zeros, std::int64_t n_trivial,
               std::uint64_t n_primes, std::int64_t q_max, bool approx_paper, int digits) {
  const PrecisionContext ctx(digits);
  CriticalOptions opts;
  opts.n_zeros = n_zeros;
  opts.n_trivial = n_trivial;
  opts.q_max = q_max;
  opts.approx_paper = approx_paper;
  const PrimeTable primes = sieve_primes(PrimeLimit::FirstN, n_primes);
  CriticalSweep r;
  {
    py::gil_scoped_release release;
    r = sweep_critical(x_min, x_max, n_points, critical_default_params(ctx.bits()), bundled_zeros(), primes, opts,
                       ctx);
  }
  std::vector<double> x, psi1v, psi2v;
  for (const auto& c : r.samples) {
    x.push_back(c.x.to_double());
    psi1v.push_back(c.psi1.to_double());
    psi2v.push_back(c.psi2.to_double());
  }
  py::dict d;
  d["x"] = x;
  d["psi1"] = psi1v;
  d["psi2"] = psi2v;
  d["max_diff"] = r.summary.max_diff;
  d["oscillations"] = r.summary.sign_changes;
  d["local_maxima"] = r.summary.local_maxima;
  d["amplitude"] = r.summary.amplitude;
  return d;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"pochzeta"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_pochzeta, m) {
  m.doc() = "Pochhammer-polynomial expansions of zeta-related functions";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<DomainError> domain(m, "DomainError", error.ptr());
  static py::exception<PoleError> pole(m, "PoleError", error.ptr());
  static py::exception<PrecisionError> precision(m, "PrecisionError", error.ptr());
  static py::exception<ParseError> parse(m, "ParseError", error.ptr());
  static py::exception<CapacityError> capacity(m, "CapacityError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain, e.what());
    } catch (const PoleError& e) {
      py::set_error(pole, e.what());
    } catch (const PrecisionError& e) {
      py::set_error(precision, e.what());
    } catch (const ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const CapacityError& e) {
      py::set_error(capacity, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def(
      "zeta",
      [](const py::object& s, int digits) {
        const PrecisionContext ctx(digits);
        return cplx(eval_zeta_continued(to_complex(s, ctx.bits()), ctx));
      },
      py::arg("s"), py::arg("digits") = 30, "zeta(s) for s != 1");
  m.def(
      "eta_factor",
      [](const py::object& s, int digits) {
        const PrecisionContext ctx(digits);
        return cplx(eval_eta_factor_continued(to_complex(s, ctx.bits()), ctx));
      },
      py::arg("s"), py::arg("digits") = 30, "(1 - 2^(1-s)) zeta(s)");
  m.def(
      "gamma",
      [](const py::object& z, int digits) {
        const PrecisionContext ctx(digits);
        return cplx(eval_gamma(to_complex(z, ctx.bits()), ctx));
      },
      py::arg("z"), py::arg("digits") = 30);
  m.def(
      "log_zeta_deriv",
      [](const py::object& a, int digits) {
        const PrecisionContext ctx(digits);
        return eval_log_zeta_deriv(to_real(a, ctx.bits()), ctx).to_double();
      },
      py::arg("a"), py::arg("digits") = 30, "1/(a-1) + zeta'(a)/zeta(a) for real a > 1");
  m.def(
      "pochhammer",
      [](const py::object& s, std::int64_t k, int digits) {
        const PrecisionContext ctx(digits);
        return cplx(eval_pochhammer(to_complex(s, ctx.bits()), k, ctx));
      },
      py::arg("s"), py::arg("k"), py::arg("digits") = 30, "P_k(s) = prod_{j<=k} (1 - s/j)");
  m.def("coefficients", &coefficients, py::arg("kind"), py::arg("alpha") = "2", py::arg("beta") = "2",
        py::arg("K") = 20, py::arg("digits") = 30, "Binomial-transform coefficients c_0..c_K");
  m.def(
      "dhat_primes",
      [](double k, const py::object& alpha, const py::object& beta, std::uint64_t n_primes, std::int64_t q_max,
         int digits) {
        const PrecisionContext ctx(digits);
        const PrimeTable primes = sieve_primes(PrimeLimit::FirstN, n_primes);
        return compute_dhat_primes(make(alpha, beta, py::str("0.5"), ctx.bits()), HReal(k, ctx.bits()), primes,
                                   q_max, ctx)
            .to_double();
      },
      py::arg("k"), py::arg("alpha") = "4.5", py::arg("beta") = "4", py::arg("n_primes") = 5000,
      py::arg("q_max") = 50, py::arg("digits") = 30);
  m.def(
      "dhat_zeros",
      [](double k, const py::object& alpha, const py::object& beta, std::size_t n_zeros, std::int64_t n_trivial,
         int digits) {
        const PrecisionContext ctx(digits);
        return cplx(compute_dhat_zeros_beta(make(alpha, beta, py::str("0.5"), ctx.bits()), HReal(k, ctx.bits()),
                                            bundled_zeros(n_zeros), n_trivial, ctx));
      },
      py::arg("k"), py::arg("alpha") = "4.5", py::arg("beta") = "4", py::arg("n_zeros") = 50,
      py::arg("n_trivial") = 50, py::arg("digits") = 30);
  m.def("series", &series, py::arg("target"), py::arg("s"), py::arg("alpha") = "2", py::arg("beta") = "2",
        py::arg("K") = 20, py::arg("digits") = 30, "Truncated series and direct value at s");
  m.def(
      "psi1",
      [](const py::object& x, std::int64_t n_zeros, std::int64_t n_trivial, int digits) {
        const PrecisionContext ctx(digits);
        return psi1(to_real(x, ctx.bits()), critical_default_params(ctx.bits()), bundled_zeros(), n_zeros,
                    n_trivial, ctx)
            .to_double();
      },
      py::arg("x"), py::arg("n_zeros") = 10, py::arg("n_trivial") = 20, py::arg("digits") = 30);
  m.def(
      "psi2",
      [](const py::object& x, std::uint64_t n_primes, std::int64_t q_max, bool approx_paper, int digits) {
        const PrecisionContext ctx(digits);
        const PrimeTable primes = sieve_primes(PrimeLimit::FirstN, n_primes);
        return psi2(to_real(x, ctx.bits()), critical_default_params(ctx.bits()), primes, q_max, approx_paper, ctx)
            .to_double();
      },
      py::arg("x"), py::arg("n_primes") = 5000, py::arg("q_max") = 50, py::arg("approx_paper") = false,
      py::arg("digits") = 30);
  m.def("sweep", &sweep, py::arg("x_min") = 2.5, py::arg("x_max") = 30.0, py::arg("n_points") = 200,
        py::arg("n_zeros") = 10, py::arg("n_trivial") = 20, py::arg("n_primes") = 5000, py::arg("q_max") = 50,
        py::arg("approx_paper") = false, py::arg("digits") = 30);
  m.def(
      "bundled_zeros",
      [](std::size_t n) {
        std::vector<double> out;
        for (const auto& t : bundled_zeros(n).ordinates) out.push_back(t.to_double());
        return out;
      },
      py::arg("n") = 100);
  m.def("first_primes", [](std::uint64_t n) { return sieve_primes(PrimeLimit::FirstN, n).primes; }, py::arg("n"));
  m.def("run_cli", &run_cli, py::arg("args"), "Runs the command line front-end; returns (exit code, stdout, stderr)");
}
