#pragma once

// Exact integer and rational arithmetic used by the closed-form evaluators.
// Backed by GMP; the aliases keep GMP out of most call sites.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rgs {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical (reduced, positive denominator) form.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt binomial(std::int64_t n, std::int64_t k);  // 0 outside 0 <= k <= n
BigInt factorial(std::int64_t n);
BigInt pow2(std::uint64_t e);

/// m!! with the convention (-1)!! = 0!! = 1. Arguments below -1 throw.
BigInt double_factorial(std::int64_t m);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& q);  // "p/q", or "p" when q == 1
double to_double(const Rational& q);

/// Cached table of m!! for m in [-1, max_arg]; lookups outside throw.
class DoubleFactorialTable {
 public:
  explicit DoubleFactorialTable(std::int64_t max_arg);
  const BigInt& operator()(std::int64_t m) const;
  std::int64_t max_arg() const { return static_cast<std::int64_t>(values_.size()) - 2; }

 private:
  std::vector<BigInt> values_;  // values_[m + 1] = m!!
};

}  // namespace rgs
