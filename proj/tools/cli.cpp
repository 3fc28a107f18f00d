#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pochzeta/coefficients.hpp"
#include "pochzeta/critical.hpp"
#include "pochzeta/errors.hpp"
#include "pochzeta/expansions.hpp"
#include "pochzeta/primes.hpp"
#include "pochzeta/special.hpp"
#include "pochzeta/zeros.hpp"

namespace pochzeta::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> alpha, beta, sigma;
  std::optional<std::int64_t> K, K_low, n_zeros, n_trivial, n_primes, q_max;
  std::optional<std::string> x_min, x_max;
  std::optional<int> points;
  int digits = 30;
  std::optional<std::string> zeros_file;
  std::optional<std::string> out;
  std::string format = "csv";
  bool approx_paper = false;
  bool asymptotic = false;
  // Subcommand specific.
  std::string kind = "b";
  std::string route = "binomial";
  std::string target = "ETA_FACTOR";
  double t = 0.0;
  std::vector<std::uint64_t> primes;
  double log_k = 15.0;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Result {
  Table table;
  std::optional<json> summary;
};

// ---------------------------------------------------------------------------
// Validation helpers; everything here runs before any computation.

template <class T>
T value_or(const std::optional<T>& v, T fallback) {
  return v ? *v : fallback;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

HComplex parse_complex_flag(const std::optional<std::string>& text, const std::string& fallback,
                            const std::string& name, Bits bits) {
  try {
    return HComplex::parse(text ? *text : fallback, bits);
  } catch (const ParseError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

HReal parse_real_flag(const std::optional<std::string>& text, const std::string& fallback, const std::string& name,
                      Bits bits) {
  try {
    return HReal::parse(text ? *text : fallback, bits);
  } catch (const ParseError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

ExpansionParams read_params(const RunConfig& c, const std::string& alpha, const std::string& beta,
                            const std::string& sigma, Bits bits) {
  ExpansionParams p{parse_complex_flag(c.alpha, alpha, "alpha", bits), parse_complex_flag(c.beta, beta, "beta", bits),
                    parse_real_flag(c.sigma, sigma, "sigma", bits)};
  require(!p.beta.is_zero(), "--beta must be nonzero");
  return p;
}

void require_real_family(const ExpansionParams& p) {
  require(p.alpha.is_real() && p.alpha.re > 1L, "--alpha must be real and > 1");
  require(p.beta.is_real() && p.beta.re > 0L, "--beta must be real and > 0");
}

// Uniform grid built in working precision so decimal endpoints print exactly.
std::vector<HReal> read_grid(const RunConfig& c, const std::string& lo, const std::string& hi, int n, int min_points,
                             Bits bits) {
  const HReal a = parse_real_flag(c.x_min, lo, "x-min", bits);
  const HReal b = parse_real_flag(c.x_max, hi, "x-max", bits);
  const int points = value_or(c.points, n);
  require(points >= min_points, "--points must be >= " + std::to_string(min_points));
  require(points == 1 ? a <= b : a < b, "--x-min must be below --x-max");
  std::vector<HReal> grid;
  for (int i = 0; i < points; ++i) grid.push_back(points == 1 ? a : a + (b - a) * HReal(i, bits) / HReal(points - 1, bits));
  return grid;
}

std::int64_t read_count(const std::optional<std::int64_t>& v, std::int64_t fallback, std::int64_t min,
                        const std::string& name) {
  const std::int64_t x = value_or(v, fallback);
  require(x >= min, "--" + name + " must be >= " + std::to_string(min));
  return x;
}

// Unreadable or malformed files are IO failures (exit 1), not usage errors.
ZeroTable read_zeros(const RunConfig& c) { return c.zeros_file ? load_zeros(*c.zeros_file) : bundled_zeros(); }

std::string num(const HReal& x, int digits) { return x.to_string(digits); }

// ---------------------------------------------------------------------------
// Subcommands.

Result run_fig1_fig2(const RunConfig& c) {
  const PrecisionContext base(c.digits);
  const Bits bits = base.bits();
  const ExpansionParams params = read_params(c, "0.5", "i", "0.5", bits);
  const std::int64_t k_low = read_count(c.K_low, 20, 0, "K-low");
  const std::int64_t k_high = read_count(c.K, 50, 0, "K");
  const std::vector<HReal> grid = read_grid(c, "0", "40", 401, 1, bits);

  const PrecisionContext ctx = base.for_binomial_order(std::max(k_low, k_high));
  const SeriesExpansion series(SeriesTarget::ETA_FACTOR, params, std::max(k_low, k_high), ctx);
  Result r;
  r.table.columns = {"t", "series_re", "series_im", "direct_re", "direct_im"};
  double max_err_30 = 0.0, max_err_35 = 0.0;
  for (const HReal& tt : grid) {
    const double t = tt.to_double();
    const std::int64_t K = t <= kCriticalLineSplit ? k_low : k_high;
    const SeriesEvaluation ev = series.evaluate(HComplex(params.sigma, tt), K);
    const HComplex& d = *ev.direct_value;
    r.table.rows.push_back({num(tt, c.digits), num(ev.partial_sum.re, c.digits), num(ev.partial_sum.im, c.digits),
                            num(d.re, c.digits), num(d.im, c.digits)});
    const double e = ev.abs_error()->to_double();
    if (t <= 30.0) max_err_30 = std::max(max_err_30, e);
    if (t <= 35.0) max_err_35 = std::max(max_err_35, e);
  }
  r.summary = json{{"max_abs_error_t_le_30", max_err_30},
                   {"max_abs_error_t_le_35", max_err_35},
                   {"K_low", k_low},
                   {"K_high", k_high},
                   {"split_t", kCriticalLineSplit}};
  return r;
}

Result run_fig3(const RunConfig& c) {
  const PrecisionContext base(c.digits);
  const Bits bits = base.bits();
  const ExpansionParams params = read_params(c, "2", "2", "0", bits);
  const std::int64_t K = read_count(c.K, 40, 0, "K");
  const std::vector<HReal> grid = read_grid(c, "-1", "0.99", 200, 1, bits);
  require(grid.front() >= -1L && grid.back() < 1L, "sigma grid must lie in [-1, 1)");

  const SeriesExpansion series(SeriesTarget::LOG_ETA, params, K, base.for_binomial_order(K));
  Result r;
  r.table.columns = {"sigma", "series", "direct", "abs_error"};
  double max_err = 0.0;
  for (const HReal& sigma : grid) {
    const SeriesEvaluation ev = series.evaluate(HComplex(sigma));
    std::vector<std::string> row{num(sigma, c.digits), num(ev.partial_sum.re, c.digits)};
    if (ev.direct_value) {
      row.push_back(num(ev.direct_value->re, c.digits));
      row.push_back(num(*ev.abs_error(), c.digits));
      max_err = std::max(max_err, ev.abs_error()->to_double());
    } else {
      row.insert(row.end(), {"nan", "nan"});
    }
    r.table.rows.push_back(std::move(row));
  }
  r.summary = json{{"max_abs_error", max_err}, {"K", K}};
  return r;
}

Result run_critical(const RunConfig& c) {
  const PrecisionContext ctx(c.digits);
  const Bits bits = ctx.bits();
  const ExpansionParams params = read_params(c, "4.5", "4", "0.5", bits);
  require_real_family(params);
  CriticalOptions opts;
  opts.n_zeros = read_count(c.n_zeros, 10, 0, "n-zeros");
  opts.n_trivial = read_count(c.n_trivial, 20, 0, "n-trivial");
  opts.q_max = read_count(c.q_max, 50, 1, "q-max");
  opts.approx_paper = c.approx_paper;
  opts.asymptotic = c.asymptotic;
  const std::int64_t n_primes = read_count(c.n_primes, 5000, 1, "n-primes");
  const std::vector<HReal> grid = read_grid(c, "2.5", "30", 200, 2, bits);
  const ZeroTable zeros = read_zeros(c);
  require(static_cast<std::size_t>(opts.n_zeros) <= zeros.size(),
          "--n-zeros exceeds the " + std::to_string(zeros.size()) + " available ordinates");
  const PrimeTable primes = sieve_primes(PrimeLimit::FirstN, static_cast<std::uint64_t>(n_primes));

  const CriticalSweep sweep = sweep_critical(grid.front().to_double(), grid.back().to_double(), static_cast<int>(grid.size()), params, zeros,
                                             primes, opts, ctx);
  Result r;
  r.table.columns = {"x", "k", "psi1", "psi2", "diff"};
  for (const auto& s : sweep.samples) {
    r.table.rows.push_back(
        {num(s.x, c.digits), num(s.k, c.digits), num(s.psi1, c.digits), num(s.psi2, c.digits), num(s.diff, c.digits)});
  }
  const SweepSummary& m = sweep.summary;
  r.summary = json{
      {"max_diff", m.max_diff},
      {"oscillations", m.sign_changes},
      {"local_maxima", m.local_maxima},
      {"amplitude", m.amplitude},
      {"mean_psi1", m.mean_psi1},
      {"params",
       {{"alpha", params.alpha.re.to_double()}, {"beta", params.beta.re.to_double()}, {"sigma", params.sigma.to_double()}}},
      {"truncations",
       {{"n_zeros", opts.n_zeros}, {"n_trivial", opts.n_trivial}, {"n_primes", n_primes}, {"q_max", opts.q_max}}},
      {"approx_paper", opts.approx_paper},
      {"asymptotic", opts.asymptotic}};
  return r;
}

Result run_fig6(const RunConfig& c) {
  const PrecisionContext ctx(c.digits);
  const Bits bits = ctx.bits();
  const ExpansionParams params = read_params(c, "4.5", "4", "0.5", bits);
  require_real_family(params);
  const std::int64_t q_max = read_count(c.q_max, 100, 1, "q-max");
  std::vector<std::uint64_t> primes = c.primes.empty() ? std::vector<std::uint64_t>{29, 229, 541} : c.primes;
  for (const auto p : primes) require(is_prime(p), std::to_string(p) + " is not prime");
  const std::vector<HReal> xs = read_grid(c, "2.5", "30", 200, 1, bits);
  Result r;
  r.table.columns = {"x"};
  std::vector<std::vector<std::pair<HReal, HReal>>> curves;
  json peaks = json::object();
  for (const auto p : primes) {
    r.table.columns.push_back("p" + std::to_string(p));
    curves.push_back(prime_contribution(p, xs, params, q_max, ctx, c.approx_paper));
    const auto& curve = curves.back();
    const auto peak = std::max_element(curve.begin(), curve.end(), [](const auto& a, const auto& b) {
      return abs(a.second) < abs(b.second);
    });
    peaks[std::to_string(p)] = peak->first.to_double();
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<std::string> row{num(xs[i], c.digits)};
    for (const auto& curve : curves) row.push_back(num(curve[i].second, c.digits));
    r.table.rows.push_back(std::move(row));
  }
  r.summary = json{{"peak_x", peaks}, {"q_max", q_max}};
  return r;
}

Result run_fig7(const RunConfig& c, std::ostream& err) {
  const PrecisionContext ctx(c.digits);
  const Bits bits = ctx.bits();
  ExpansionParams params = read_params(c, "1", "1", "0.5", bits);
  // A positive real alpha keeps every zero-sum denominator away from zero.
  require(params.alpha.is_real() && params.alpha.re > 0L, "--alpha must be real and > 0");
  const std::vector<HReal> grid = read_grid(c, "1", "6", 26, 1, bits);
  const ZeroTable zeros = read_zeros(c);
  const std::int64_t n_zeros = read_count(c.n_zeros, static_cast<std::int64_t>(zeros.size()), 1, "n-zeros");
  require(static_cast<std::size_t>(n_zeros) <= zeros.size(),
          "--n-zeros exceeds the " + std::to_string(zeros.size()) + " available ordinates");
  const std::int64_t n_trivial = read_count(c.n_trivial, 10000, 0, "n-trivial");
  if (n_zeros < 3600) {
    err << "warning: " << n_zeros
        << " zeros loaded; the residual is dominated by the zero-sum tail (3600 or more are needed for 1e-3)\n";
  }

  const HReal gamma = HReal::euler_gamma(bits);
  const HReal k = exp(HReal(c.log_k, bits));
  Result r;
  r.table.columns = {"beta", "psi", "psi_minus_gamma"};
  for (const HReal& lb : grid) {
    const HReal beta = pow(HReal(10, bits), lb);
    params.beta = HComplex(beta);
    const HReal psi = psi_infbeta(k, params, zeros, n_zeros, n_trivial, ctx);
    r.table.rows.push_back({num(beta, c.digits), num(psi, c.digits), num(psi - gamma, c.digits)});
  }
  const HReal limit = psi_infbeta_limit(params.alpha.re, zeros, n_zeros, n_trivial, ctx);
  r.table.rows.push_back({"inf", num(limit, c.digits), num(limit - gamma, c.digits)});
  r.summary = json{{"n_zeros", n_zeros},
                   {"n_trivial", n_trivial},
                   {"log_k", c.log_k},
                   {"limit_minus_gamma", (limit - gamma).to_double()}};
  return r;
}

CoefficientKind parse_kind(const std::string& s) {
  for (const auto k : {CoefficientKind::B, CoefficientKind::A, CoefficientKind::D, CoefficientKind::DHAT,
                       CoefficientKind::DHATHAT, CoefficientKind::S}) {
    if (to_string(k) == s) return k;
  }
  throw UsageError("--kind must be one of b, A, d, dhat, dhathat, s");
}

CoefficientRoute parse_route(const std::string& s) {
  for (const auto r : {CoefficientRoute::Binomial, CoefficientRoute::ZerosBeta, CoefficientRoute::Primes,
                       CoefficientRoute::ClosedForm}) {
    if (to_string(r) == s) return r;
  }
  throw UsageError("--route must be one of binomial, zeros_beta, primes, closed_form");
}

/// Splits CSV written by a library routine back into a table.
Table parse_csv(const std::string& text) {
  Table t;
  std::string line;
  std::istringstream in(text);
  bool header = true;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (header) {
      t.columns = cells;
      header = false;
    } else {
      t.rows.push_back(cells);
    }
  }
  return t;
}

Table series_table(const CoefficientSeries& s) {
  std::ostringstream os;
  s.write_csv(os, true);
  return parse_csv(os.str());
}

Result run_coeffs(const RunConfig& c) {
  const PrecisionContext base(c.digits);
  const Bits bits = base.bits();
  const ExpansionParams params = read_params(c, "2", "2", "0", bits);
  const std::int64_t K = read_count(c.K, 20, 0, "K");
  const CoefficientKind kind = parse_kind(c.kind);
  const CoefficientRoute route = parse_route(c.route);

  auto bad_combo = [&] {
    return UsageError("route " + std::string(to_string(route)) + " is not available for kind " +
                      std::string(to_string(kind)));
  };
  CoefficientSeries series;
  if (route == CoefficientRoute::Binomial) {
    const PrecisionContext ctx = base.for_binomial_order(K);
    switch (kind) {
      case CoefficientKind::B: series = compute_b(params, K, ctx); break;
      case CoefficientKind::A: series = compute_maslanka_A(K, ctx); break;
      case CoefficientKind::D: series = compute_d(params, K, ctx); break;
      case CoefficientKind::DHAT:
        require_real_family(params);
        series = compute_dhat_binomial(params, K, ctx);
        break;
      case CoefficientKind::S:
        require_real_family(params);
        series = compute_s_binomial(params, K, ctx);
        break;
      default: throw bad_combo();
    }
  } else if (route == CoefficientRoute::ClosedForm) {
    if (kind != CoefficientKind::S) throw bad_combo();
    require_real_family(params);
    series = compute_s_series(params, K, base);
  } else if (route == CoefficientRoute::Primes) {
    if (kind != CoefficientKind::DHAT) throw bad_combo();
    require_real_family(params);
    require(K >= 1, "--K must be >= 1 for the primes route");
    const std::int64_t n_primes = read_count(c.n_primes, 5000, 1, "n-primes");
    const std::int64_t q_max = read_count(c.q_max, 50, 1, "q-max");
    const PrimeTable primes = sieve_primes(PrimeLimit::FirstN, static_cast<std::uint64_t>(n_primes));
    series.kind = kind;
    series.route = route;
    series.params = params;
    series.ctx = base;
    series.first_k = 1;
    for (std::int64_t k = 1; k <= K; ++k) {
      series.values.emplace_back(
          compute_dhat_primes(params, HReal(k, bits), primes, q_max, base, {c.approx_paper, c.asymptotic}));
    }
  } else {
    if (kind != CoefficientKind::DHAT && kind != CoefficientKind::DHATHAT) throw bad_combo();
    const ZeroTable zeros = read_zeros(c);
    const std::int64_t n_zeros = read_count(c.n_zeros, 10, 0, "n-zeros");
    require(static_cast<std::size_t>(n_zeros) <= zeros.size(),
            "--n-zeros exceeds the " + std::to_string(zeros.size()) + " available ordinates");
    const std::int64_t n_trivial = read_count(c.n_trivial, 20, 0, "n-trivial");
    const ZeroTable used = zeros.first(static_cast<std::size_t>(n_zeros));
    const bool dhat = kind == CoefficientKind::DHAT;
    series.kind = kind;
    series.route = route;
    series.params = params;
    series.ctx = base;
    series.first_k = dhat || c.asymptotic ? 1 : 0;
    require(K >= series.first_k, "--K must be >= " + std::to_string(series.first_k));
    for (std::int64_t k = series.first_k; k <= K; ++k) {
      const HReal kk(k, bits);
      series.values.push_back(dhat ? compute_dhat_zeros_beta(params, kk, used, n_trivial, base, c.asymptotic)
                                   : compute_dhathat(params, kk, used, n_trivial, base, c.asymptotic));
    }
  }
  return {series_table(series), std::nullopt};
}

Result run_series(const RunConfig& c) {
  const PrecisionContext base(c.digits);
  const Bits bits = base.bits();
  SeriesTarget target{};
  try {
    target = parse_series_target(c.target);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const ExpansionParams params = read_params(c, "2", "2", "0", bits);
  const std::int64_t K = read_count(c.K, 40, 0, "K");
  const std::vector<HReal> grid = read_grid(c, "0", "0.99", 100, 1, bits);
  if (target == SeriesTarget::LOG_DERIV || target == SeriesTarget::F_FUNCTION ||
      target == SeriesTarget::INV_S_MINUS_1) {
    require_real_family(params);
  }

  ZeroTable zeros;
  SeriesOptions opts;
  if (target == SeriesTarget::F_FUNCTION) {
    const ZeroTable all = read_zeros(c);
    const std::int64_t n_zeros = read_count(c.n_zeros, 10, 0, "n-zeros");
    require(static_cast<std::size_t>(n_zeros) <= all.size(),
            "--n-zeros exceeds the " + std::to_string(all.size()) + " available ordinates");
    zeros = all.first(static_cast<std::size_t>(n_zeros));
    opts.zeros = &zeros;
    opts.n_trivial = read_count(c.n_trivial, 20, 0, "n-trivial");
  }
  const bool binomial = target != SeriesTarget::F_FUNCTION && target != SeriesTarget::INV_S_MINUS_1;
  const PrecisionContext ctx = binomial ? base.for_binomial_order(K) : base;
  const SeriesExpansion series(target, params, K, ctx, opts);

  std::vector<SeriesEvaluation> rows;
  for (const HReal& x : grid) rows.push_back(series.evaluate(HComplex(x, HReal(c.t, bits))));
  std::ostringstream os;
  write_series_csv(os, rows, "sigma", c.digits);
  Result r;
  r.table = parse_csv(os.str());
  return r;
}

// ---------------------------------------------------------------------------
// Output.

void write_csv(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
}

json to_json(const Result& r) {
  json doc{{"columns", r.table.columns}, {"rows", r.table.rows}};
  if (r.summary) doc["summary"] = *r.summary;
  return doc;
}

void emit(const RunConfig& c, const Result& r, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  if (c.out) {
    file.open(*c.out);
    if (!file) throw Error("cannot open output file '" + *c.out + "'");
  }
  std::ostream& os = c.out ? static_cast<std::ostream&>(file) : out;
  if (c.format == "json") {
    os << to_json(r).dump(2) << '\n';
    return;
  }
  write_csv(os, r.table);
  if (!r.summary) return;
  if (c.out) {
    std::ofstream summary(*c.out + ".summary.json");
    if (!summary) throw Error("cannot open summary file '" + *c.out + ".summary.json'");
    summary << r.summary->dump(2) << '\n';
  } else {
    err << r.summary->dump(2) << '\n';
  }
}

void add_common_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--alpha", c.alpha, "Expansion parameter alpha (real or a+bi)");
  sub->add_option("--beta", c.beta, "Expansion parameter beta (real, i, or a+bi)");
  sub->add_option("--sigma", c.sigma, "Evaluation line Re(s)");
  sub->add_option("--K", c.K, "Truncation order");
  sub->add_option("--n-zeros", c.n_zeros, "Number of nontrivial zeros used");
  sub->add_option("--n-trivial", c.n_trivial, "Number of trivial-zero terms");
  sub->add_option("--n-primes", c.n_primes, "Number of primes used");
  sub->add_option("--q-max", c.q_max, "Largest prime power exponent");
  sub->add_option("--x-min", c.x_min, "Grid start");
  sub->add_option("--x-max", c.x_max, "Grid end");
  sub->add_option("--points", c.points, "Grid size");
  sub->add_option("--digits", c.digits, "Target decimal digits")->check(CLI::Range(10, 100000));
  sub->add_option("--zeros-file", c.zeros_file, "Zero ordinates, one per line");
  sub->add_option("--out", c.out, "Output file (default stdout)");
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_flag("--approx-paper", c.approx_paper, "Use exp(-k p^-beta q) in prime sums");
  sub->add_flag("--asymptotic", c.asymptotic, "Use Gamma(a) k^-a in place of B(a, k+1)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Pochhammer-polynomial expansions of zeta-related functions"};
  app.require_subcommand(1);
  std::vector<std::pair<std::string, std::string>> subs = {
      {"fig1", "Critical-line series, real part"},
      {"fig2", "Critical-line series, imaginary part"},
      {"fig3", "Series for ln of the eta factor on the real axis"},
      {"fig4", "Critical functions psi1 (zeros) and psi2 (primes)"},
      {"fig5", "Same sweep as fig4"},
      {"fig6", "Single-prime contributions to psi2"},
      {"fig7", "Large-beta limit of psi(k)"},
      {"coeffs", "Dump one coefficient family"},
      {"series", "Evaluate a truncated series on a grid"},
      {"sweep", "Critical-function sweep with arbitrary parameters"},
  };
  for (const auto& [name, help] : subs) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common_options(sub, c);
    sub->callback([&c, name = name] { c.subcommand = name; });
    if (name == "fig1" || name == "fig2") sub->add_option("--K-low", c.K_low, "Order used for t <= 18");
    if (name == "fig6") sub->add_option("--prime", c.primes, "Prime to plot (repeatable)");
    if (name == "fig7") sub->add_option("--log-k", c.log_k, "ln k");
    if (name == "coeffs") {
      sub->add_option("--kind", c.kind, "b, A, d, dhat, dhathat or s");
      sub->add_option("--route", c.route, "binomial, zeros_beta, primes or closed_form");
    }
    if (name == "series") {
      sub->add_option("--target", c.target, "ETA_FACTOR, MASLANKA, LOG_ETA, LOG_DERIV, F_FUNCTION, INV_S_MINUS_1");
      sub->add_option("--t", c.t, "Imaginary part of s");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Result r;
    const std::string& s = c.subcommand;
    if (s == "fig1" || s == "fig2") r = run_fig1_fig2(c);
    else if (s == "fig3") r = run_fig3(c);
    else if (s == "fig4" || s == "fig5" || s == "sweep") r = run_critical(c);
    else if (s == "fig6") r = run_fig6(c);
    else if (s == "fig7") r = run_fig7(c, err);
    else if (s == "coeffs") r = run_coeffs(c);
    else r = run_series(c);
    emit(c, r, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace pochzeta::cli
