#pragma once

// Binary Krawtchouk polynomials
//
//   K_i^N(x) = sum_{q=0}^{i} (-1)^q C(x, q) C(N - x, i - q)
//
// evaluated exactly at integer points, together with the two pointwise upper
// bounds used to control them: the orthogonality bound
//   |K_i^N(t)| <= 2^{N/2} C(N,i)^{1/2} C(N,t)^{-1/2}
// and Derksen's bound
//   |K_i^N(t)| <= C(N,i) (i/N + (N-t)^2/N^2)^{i/2}.

#include <cstdint>
#include <vector>

#include "rgs/exact.hpp"

namespace rgs {

/// Exact K_i^N(x) from the defining sum. Requires 0 <= i <= N and 0 <= x <= N.
BigInt krawtchouk(std::int64_t i, std::int64_t N, std::int64_t x);

/// [K_0^N(x), ..., K_{i_max}^N(x)] via the three-term recurrence in the degree
///   (i + 1) K_{i+1} = (N - 2x) K_i - (N - i + 1) K_{i-1}.
std::vector<BigInt> krawtchouk_row(std::int64_t N, std::int64_t x, std::int64_t i_max);

/// Orthogonality bound, evaluated in log space.
double orth_bound(std::int64_t i, std::int64_t N, std::int64_t t);

/// Derksen's bound in the form C(N,i) (i/N + (N-t)^2/N^2)^{i/2}. This form
/// fails for t near N (at i = 1, t = N it gives sqrt(N) < N = |K_1^N(N)|).
/// At N = 0 the base is taken as 1.
double derksen_bound(std::int64_t i, std::int64_t N, std::int64_t t);

/// C(N,i) (i/N + (N-2t)^2/N^2)^{i/2}, the centred variant that holds for all
/// integer points.
double derksen_bound_centered(std::int64_t i, std::int64_t N, std::int64_t t);

/// log C(n, k) via lgamma.
double log_binomial(std::int64_t n, std::int64_t k);

}  // namespace rgs
