#pragma once

// Exact arithmetic used by every rate computation: arbitrary-size naturals
// and rationals backed by GMP.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace metaprox::rates {

using Natural = mpz_class;
using Rational = mpq_class;

/// Smallest integer >= q.
Natural ceil(const Rational& q);

/// Parses "7", "-3/4", "0.125" or "1e-3" exactly. Throws ConfigError.
Rational parse_rational(std::string_view text);

/// Parses a nonnegative decimal integer. Throws ConfigError.
Natural parse_natural(std::string_view text);

std::string to_string(const Natural& n);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline Natural max(const Natural& a, const Natural& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Counts elementary evaluations of an exact rate computation and throws
/// BudgetExceeded once the limit is passed.
class EvalBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 1'000'000;
  static constexpr std::size_t kDefaultMaxBits = 4096;

  explicit EvalBudget(std::uint64_t limit = kDefaultLimit, std::size_t max_bits = kDefaultMaxBits)
      : limit_(limit), max_bits_(max_bits) {}

  void charge(std::uint64_t n = 1);
  /// Charges n evaluations given as an exact natural; throws before doing
  /// any work if n exceeds what is left.
  void charge(const Natural& n);
  /// Throws if n evaluations could not be afforded, without charging.
  void require(const Natural& n) const;
  /// Throws once an intermediate value grows past max_bits.
  void check_size(const Natural& v) const;
  std::size_t max_bits() const { return max_bits_; }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t remaining() const { return limit_ - used_; }

 private:
  std::uint64_t limit_;
  std::size_t max_bits_;
  std::uint64_t used_ = 0;
};

}  // namespace metaprox::rates
