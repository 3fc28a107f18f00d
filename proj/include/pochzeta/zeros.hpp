#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "pochzeta/hreal.hpp"
#include "pochzeta/precision.hpp"

namespace pochzeta {

/// Ordinates t_j of nontrivial zeros 1/2 + i t_j, strictly ascending.
struct ZeroTable {
  std::vector<HReal> ordinates;
  /// File path, or "bundled".
  std::string source;
  /// Largest number of significant digits among the parsed ordinates.
  int digits = 0;

  std::size_t size() const noexcept { return ordinates.size(); }
  bool empty() const noexcept { return ordinates.empty(); }
  const HReal& operator[](std::size_t i) const { return ordinates[i]; }
  /// First `n` ordinates (or all of them).
  ZeroTable first(std::size_t n) const;
};

inline constexpr std::size_t kAllZeros = std::numeric_limits<std::size_t>::max();

/// Reads one decimal ordinate per line; blank lines and lines starting with
/// '#' are skipped. Throws ParseError (with the 1-based line) on malformed
/// or non-positive entries, OrderError when not strictly ascending, and
/// ParseError when the input holds no ordinate at all.
ZeroTable parse_zeros(std::istream& in, const std::string& source, std::size_t max_count = kAllZeros);

/// parse_zeros on a file. Throws ParseError if it cannot be opened.
ZeroTable load_zeros(const std::string& path, std::size_t max_count = kAllZeros);

/// The first 100 ordinates shipped with the library.
ZeroTable bundled_zeros(std::size_t max_count = kAllZeros);

struct ZeroCheck {
  /// min |eta(1/2 + i t')| over the window.
  HReal min_magnitude;
  HReal argmin;
};

/// Minimises |(1 - 2^(1/2 - it')) zeta(1/2 + it')| over t' in
/// [t - window, t + window]. Throws DomainError for t <= 0.
ZeroCheck verify_zero(const HReal& t, const PrecisionContext& ctx, double window = 0.01);

}  // namespace pochzeta
