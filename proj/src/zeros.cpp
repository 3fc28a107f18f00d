#include "pochzeta/zeros.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "pochzeta/errors.hpp"
#include "pochzeta/hcomplex.hpp"
#include "pochzeta/special.hpp"

namespace pochzeta {

namespace detail {
// Generated from data/zeros_first100.txt at build time.
extern const char* const kBundledZerosText;
}  // namespace detail

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

int significant_digits(const std::string& literal) {
  int count = 0;
  bool leading = true;
  for (const char c : literal) {
    if (c == 'e' || c == 'E') break;
    if (!std::isdigit(static_cast<unsigned char>(c))) continue;
    if (leading && c == '0') continue;
    leading = false;
    ++count;
  }
  return count;
}

}  // namespace

ZeroTable ZeroTable::first(std::size_t n) const {
  ZeroTable t = *this;
  if (t.ordinates.size() > n) t.ordinates.resize(n);
  return t;
}

ZeroTable parse_zeros(std::istream& in, const std::string& source, std::size_t max_count) {
  ZeroTable table;
  table.source = source;
  if (max_count == 0) return table;

  std::vector<std::pair<std::size_t, std::string>> entries;
  std::string line;
  std::size_t line_no = 0;
  int digits = 0;
  while (entries.size() < max_count && std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    digits = std::max(digits, significant_digits(text));
    entries.emplace_back(line_no, text);
  }
  if (entries.empty()) throw ParseError("no zero ordinates in " + source, 0);

  const Bits bits = PrecisionContext::digits_to_bits(std::max(digits, 20) + 5);
  table.digits = digits;
  table.ordinates.reserve(entries.size());
  for (const auto& [no, text] : entries) {
    HReal t(bits);
    try {
      t = HReal::parse(text, bits);
    } catch (const ParseError&) {
      throw ParseError("not a decimal number: '" + text + "'", no);
    }
    if (!(t > 0L)) throw ParseError("zero ordinate must be positive", no);
    if (!table.ordinates.empty() && !(t > table.ordinates.back())) {
      throw OrderError("zero ordinates must be strictly ascending", no);
    }
    table.ordinates.push_back(std::move(t));
  }
  return table;
}

ZeroTable load_zeros(const std::string& path, std::size_t max_count) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open zeros file '" + path + "'", 0);
  return parse_zeros(in, path, max_count);
}

ZeroTable bundled_zeros(std::size_t max_count) {
  std::istringstream in(detail::kBundledZerosText);
  return parse_zeros(in, "bundled", max_count);
}

ZeroCheck verify_zero(const HReal& t, const PrecisionContext& ctx, double window) {
  if (!(t > 0L)) throw DomainError("zero ordinate must be positive");
  const Bits bits = ctx.bits();
  const HReal half(0.5, bits);
  auto eta = [&](const HReal& x) { return eval_eta_factor(HComplex(half, x), ctx); };

  // Coarse scan, then secant steps on the complex function, which is close
  // to linear in t near a simple zero. Iterates are clamped to the window.
  constexpr int kGrid = 8;
  const HReal lo = t.rounded(bits) - HReal(window, bits);
  const HReal hi = t.rounded(bits) + HReal(window, bits);
  const HReal step = HReal(2.0 * window / kGrid, bits);
  std::vector<std::pair<HReal, HComplex>> samples;
  int best = 0;
  for (int i = 0; i <= kGrid; ++i) {
    HReal x = lo + step * static_cast<long>(i);
    HComplex v = eta(x);
    if (i > 0 && abs(v) < abs(samples[static_cast<std::size_t>(best)].second)) best = i;
    samples.emplace_back(std::move(x), std::move(v));
  }
  ZeroCheck out{abs(samples[static_cast<std::size_t>(best)].second), samples[static_cast<std::size_t>(best)].first};

  const int other = best == kGrid ? best - 1 : best + 1;
  HReal x0 = samples[static_cast<std::size_t>(other)].first, x1 = out.argmin;
  HComplex f0 = samples[static_cast<std::size_t>(other)].second, f1 = samples[static_cast<std::size_t>(best)].second;
  const HReal tol = ten_to_minus(std::min(ctx.working_digits(), 18), bits);
  for (int iter = 0; iter < 60; ++iter) {
    const HComplex df = f1 - f0;
    if (df.is_zero()) break;
    HReal x2 = x1 - (f1 * HComplex(x1 - x0) / df).re;
    x2 = max(lo, min(hi, x2));
    HComplex f2 = eta(x2);
    const HReal m2 = abs(f2);
    if (m2 < out.min_magnitude) out = {m2, x2};
    const bool done = abs(x2 - x1) <= tol;
    x0 = std::move(x1);
    f0 = std::move(f1);
    x1 = std::move(x2);
    f1 = std::move(f2);
    if (done) break;
  }
  return out;
}

}  // namespace pochzeta
