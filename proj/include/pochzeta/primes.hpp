#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pochzeta {

enum class PrimeLimit { FirstN, UpTo };

/// Ascending list of primes starting at 2.
struct PrimeTable {
  std::vector<std::uint64_t> primes;
  PrimeLimit limit_kind = PrimeLimit::FirstN;
  std::uint64_t bound = 0;

  std::size_t size() const noexcept { return primes.size(); }
  bool empty() const noexcept { return primes.empty(); }
  std::uint64_t operator[](std::size_t i) const { return primes[i]; }
  /// First `n` entries (or all of them).
  PrimeTable first(std::size_t n) const;
};

inline constexpr std::size_t kDefaultSieveBudgetBytes = std::size_t{1} << 30;
inline constexpr std::size_t kSieveSegmentSize = 1'000'000;

/// Segmented sieve of Eratosthenes.
///
/// FirstN: the first `bound` primes (bound >= 1). UpTo: all primes <= bound
/// (bound >= 2). Throws DomainError on a bad bound and CapacityError when
/// the table would not fit in `budget_bytes`.
PrimeTable sieve_primes(PrimeLimit kind, std::uint64_t bound,
                        std::size_t budget_bytes = kDefaultSieveBudgetBytes);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n) noexcept;

}  // namespace pochzeta
