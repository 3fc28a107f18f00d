#pragma once

#include <cstdint>

namespace pochzeta {

/// Decimal precision policy shared by every evaluation.
///
/// Values are carried at `working_digits() = target_digits + guard_digits`
/// and results are promised to `target_digits`. Alternating binomial
/// transforms of order k lose about 0.302 k digits (C(k, k/2) ~ 2^k), so
/// they require `guard_digits >= required_guard(k)`.
class PrecisionContext {
 public:
  static constexpr int kMinTargetDigits = 10;
  static constexpr int kDefaultGuardDigits = 10;

  /// Throws DomainError when target_digits < 10 or guard_digits < 0.
  explicit PrecisionContext(int target_digits, int guard_digits = kDefaultGuardDigits);

  int target_digits() const noexcept { return target_; }
  int guard_digits() const noexcept { return guard_; }
  int working_digits() const noexcept { return target_ + guard_; }

  /// Binary precision matching working_digits().
  std::int64_t bits() const noexcept { return digits_to_bits(working_digits()); }

  /// Same target with a different number of guard digits.
  PrecisionContext with_guard(int guard_digits) const;

  /// Same target with at least `required_guard(k)` guard digits.
  PrecisionContext for_binomial_order(long k) const;

  /// ceil(0.302 k) + 10.
  static int required_guard(long k) noexcept;

  /// Throws PrecisionError when the guard digits cannot absorb an order-k
  /// alternating binomial transform.
  void check_binomial_order(long k) const;

  static std::int64_t digits_to_bits(int digits) noexcept;

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int target_;
  int guard_;
};

}  // namespace pochzeta
