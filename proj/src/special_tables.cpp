#include "special_tables.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "pochzeta/precision.hpp"

namespace pochzeta::detail {

std::shared_ptr<const std::vector<HReal>> alternating_weights(long n, Bits bits) {
  static std::mutex mu;
  static std::map<std::pair<long, Bits>, std::shared_ptr<const std::vector<HReal>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({n, bits}); it != cache.end()) return it->second;
  }

  // Cohen, Rodriguez Villegas and Zagier, algorithm 1.
  const Bits work = bits + 16;
  HReal d = sqrt(HReal(8, work)) + 3L;
  d = pow(d, n);
  d = (d + 1L / d) / 2L;
  HReal b(-1, work);
  HReal c = -d;
  auto w = std::make_shared<std::vector<HReal>>();
  w->reserve(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    c = b - c;
    w->push_back((c / d).rounded(bits));
    b *= 2 * (k + n);
    b *= (k - n);
    b /= (2 * k + 1);
    b /= (k + 1);
  }

  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(n, bits), std::move(w)).first->second;
}

std::shared_ptr<const std::vector<mpq_class>> bernoulli_over_factorial(long count) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<mpq_class>> table;
  std::lock_guard lock(mu);
  if (table && static_cast<long>(table->size()) >= count) return table;

  // x/(e^x - 1) + x/2 = sum_j T_j x^2j, multiplied by (e^x - 1)/x = 1 gives
  // T_n = 1/(2 (2n)!) - sum_{j<n} T_j / (2n - 2j + 1)!.
  const long m = std::max(count, 8L);
  std::vector<mpz_class> fact(static_cast<std::size_t>(2 * m + 2));
  fact[0] = 1;
  for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * static_cast<unsigned long>(i);
  auto t = std::make_shared<std::vector<mpq_class>>();
  t->reserve(static_cast<std::size_t>(m));
  t->push_back(mpq_class(1));
  for (long n = 1; n < m; ++n) {
    mpq_class v(1, 1);
    v /= mpq_class(2 * fact[static_cast<std::size_t>(2 * n)]);
    for (long j = 0; j < n; ++j) {
      v -= (*t)[static_cast<std::size_t>(j)] / mpq_class(fact[static_cast<std::size_t>(2 * n - 2 * j + 1)]);
    }
    v.canonicalize();
    t->push_back(v);
  }
  table = t;
  return table;
}

std::shared_ptr<const std::vector<HReal>> spouge_coefficients(long a, Bits bits) {
  static std::mutex mu;
  static std::map<std::pair<long, Bits>, std::shared_ptr<const std::vector<HReal>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({a, bits}); it != cache.end()) return it->second;
  }

  auto c = std::make_shared<std::vector<HReal>>();
  c->reserve(static_cast<std::size_t>(a));
  c->push_back(sqrt(HReal::pi(bits) * 2L));
  HReal factorial(1, bits);  // (k-1)!
  for (long k = 1; k < a; ++k) {
    if (k > 1) factorial *= (k - 1);
    const HReal base(a - k, bits);
    HReal term = exp(log(base) * (HReal(k, bits) - HReal(0.5, bits)) + HReal(a - k, bits)) / factorial;
    if (k % 2 == 0) term = -term;
    c->push_back(std::move(term));
  }

  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(a, bits), std::move(c)).first->second;
}

}  // namespace pochzeta::detail
