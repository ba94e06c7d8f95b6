#include "rgs/exact.hpp"

#include <stdexcept>

namespace rgs {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt pow2(std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

BigInt double_factorial(std::int64_t m) {
  if (m < -1) throw std::domain_error("double factorial argument below -1");
  if (m <= 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

double to_double(const Rational& q) { return q.get_d(); }

DoubleFactorialTable::DoubleFactorialTable(std::int64_t max_arg) {
  if (max_arg < -1) max_arg = -1;
  values_.resize(static_cast<std::size_t>(max_arg + 2));
  values_[0] = 1;  // (-1)!!
  if (max_arg >= 0) values_[1] = 1;
  for (std::int64_t m = 1; m <= max_arg; ++m) {
    const auto i = static_cast<std::size_t>(m + 1);
    values_[i] = values_[i - 2] * m;  // m!! = m * (m-2)!!
  }
}

const BigInt& DoubleFactorialTable::operator()(std::int64_t m) const {
  if (m < -1 || m > max_arg()) throw std::out_of_range("double factorial table lookup");
  return values_[static_cast<std::size_t>(m + 1)];
}

}  // namespace rgs
