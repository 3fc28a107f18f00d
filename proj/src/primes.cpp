#include "pochzeta/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pochzeta/errors.hpp"

namespace pochzeta {

namespace {

std::vector<std::uint64_t> small_sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

// Upper bound for the n-th prime (Rosser's theorem, n >= 6).
std::uint64_t nth_prime_upper_bound(std::uint64_t n) {
  if (n < 6) return 13;
  const double x = static_cast<double>(n);
  return static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
}

std::size_t estimated_table_bytes(std::uint64_t limit) {
  const double x = static_cast<double>(std::max<std::uint64_t>(limit, 3));
  // pi(x) < 1.26 x / ln x
  return static_cast<std::size_t>(1.26 * x / std::log(x)) * sizeof(std::uint64_t) + kSieveSegmentSize;
}

std::vector<std::uint64_t> segmented_sieve(std::uint64_t limit, std::uint64_t max_count) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint64_t> base = small_sieve(root);
  std::vector<std::uint8_t> segment(kSieveSegmentSize);

  for (std::uint64_t low = 2; low <= limit && out.size() < max_count; low += kSieveSegmentSize) {
    const std::uint64_t high = std::min<std::uint64_t>(low + kSieveSegmentSize - 1, limit);
    std::fill(segment.begin(), segment.end(), std::uint8_t{1});
    for (const std::uint64_t p : base) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      for (std::uint64_t j = start; j <= high; j += p) segment[j - low] = 0;
    }
    for (std::uint64_t n = low; n <= high && out.size() < max_count; ++n) {
      if (segment[n - low]) out.push_back(n);
    }
  }
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

PrimeTable PrimeTable::first(std::size_t n) const {
  PrimeTable t = *this;
  if (t.primes.size() > n) t.primes.resize(n);
  t.limit_kind = PrimeLimit::FirstN;
  t.bound = t.primes.size();
  return t;
}

PrimeTable sieve_primes(PrimeLimit kind, std::uint64_t bound, std::size_t budget_bytes) {
  PrimeTable table;
  table.limit_kind = kind;
  table.bound = bound;
  if (kind == PrimeLimit::FirstN) {
    if (bound < 1) throw DomainError("FirstN sieve needs bound >= 1");
    const std::uint64_t limit = nth_prime_upper_bound(bound);
    if (estimated_table_bytes(limit) > budget_bytes) {
      throw CapacityError("first " + std::to_string(bound) + " primes exceed the sieve memory budget");
    }
    table.primes = segmented_sieve(limit, bound);
  } else {
    if (bound < 2) throw DomainError("UpTo sieve needs bound >= 2");
    if (estimated_table_bytes(bound) > budget_bytes) {
      throw CapacityError("primes up to " + std::to_string(bound) + " exceed the sieve memory budget");
    }
    table.primes = segmented_sieve(bound, UINT64_MAX);
  }
  return table;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are sufficient for every n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace pochzeta
