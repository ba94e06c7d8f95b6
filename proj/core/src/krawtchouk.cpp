#include "rgs/krawtchouk.hpp"

#include <cmath>
#include <stdexcept>

namespace rgs {

namespace {

void check_domain(std::int64_t i, std::int64_t N, std::int64_t x) {
  if (N < 0 || i < 0 || i > N || x < 0 || x > N)
    throw std::domain_error("krawtchouk: need 0 <= i <= N and 0 <= x <= N");
}

}  // namespace

BigInt krawtchouk(std::int64_t i, std::int64_t N, std::int64_t x) {
  check_domain(i, N, x);
  BigInt sum = 0;
  for (std::int64_t q = 0; q <= i; ++q) {
    const BigInt term = binomial(x, q) * binomial(N - x, i - q);
    if (q % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

std::vector<BigInt> krawtchouk_row(std::int64_t N, std::int64_t x, std::int64_t i_max) {
  check_domain(i_max, N, x);
  std::vector<BigInt> row(static_cast<std::size_t>(i_max + 1));
  row[0] = 1;
  if (i_max >= 1) row[1] = N - 2 * x;
  BigInt next;
  for (std::int64_t i = 1; i < i_max; ++i) {
    const auto k = static_cast<std::size_t>(i);
    next = (N - 2 * x) * row[k] - (N - i + 1) * row[k - 1];
    mpz_divexact_ui(row[k + 1].get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return row;
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return -INFINITY;
  return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

double orth_bound(std::int64_t i, std::int64_t N, std::int64_t t) {
  check_domain(i, N, t);
  const double log_value = 0.5 * static_cast<double>(N) * std::log(2.0) + 0.5 * log_binomial(N, i) -
                           0.5 * log_binomial(N, t);
  return std::exp(log_value);
}

double derksen_bound(std::int64_t i, std::int64_t N, std::int64_t t) {
  check_domain(i, N, t);
  if (i == 0) return 1.0;
  const double n = static_cast<double>(N);
  const double base = static_cast<double>(i) / n + (n - static_cast<double>(t)) * (n - static_cast<double>(t)) / (n * n);
  return std::exp(log_binomial(N, i) + 0.5 * static_cast<double>(i) * std::log(base));
}

double derksen_bound_centered(std::int64_t i, std::int64_t N, std::int64_t t) {
  check_domain(i, N, t);
  if (i == 0) return 1.0;
  const double n = static_cast<double>(N);
  const double c = n - 2.0 * static_cast<double>(t);
  return std::exp(log_binomial(N, i) + 0.5 * static_cast<double>(i) * std::log(static_cast<double>(i) / n + c * c / (n * n)));
}

}  // namespace rgs
