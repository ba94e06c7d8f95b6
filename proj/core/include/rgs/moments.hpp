#pragma once

// Second moments of graph-state output distributions: the per-graph angle
// average by ternary enumeration, the average crossing parity of a uniform
// perfect matching, and exact ensemble averages for the pairing and matching
// models.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rgs/exact.hpp"
#include "rgs/graph.hpp"
#include "rgs/stats.hpp"
#include "rgs/statevector.hpp"

namespace rgs {

inline constexpr std::size_t kMaxStatmechVertices = 16;
inline constexpr std::size_t kMaxExactVertices = 64;
inline constexpr std::size_t kMaxExactDegree = 8;

/// sum over disjoint (L, R) of (-1)^{|A[L,R]|}; the angle average of m2 is this
/// divided by 2^n. Requires n <= 16.
std::int64_t statmech_sum(const Graph& g);

/// E_theta[m2(g, theta)] exactly.
Rational m2_statmech(const Graph& g);

/// Integer N with E_M[(-1)^{|A_M(L,R)|}] = N / (n-1)!! for |L| = a, |R| = b
/// and M a uniform perfect matching of [n].
BigInt matching_parity_numerator(std::int64_t n, std::int64_t a, std::int64_t b);

/// Average crossing parity between fixed disjoint sets of sizes a and b under a
/// uniform perfect matching of [n]. Requires n even, a + b <= n.
Rational avg_matching_parity(std::int64_t n, std::int64_t a, std::int64_t b);

/// M_p(n, k, l, d): inner average for the pairing model, i.e. the matching
/// parity on n*d half-edges between blown-up sets of sizes k*d and l*d.
Rational pairing_inner_average(std::int64_t n, std::int64_t k, std::int64_t l, std::int64_t d);

/// Inner average for the matching model: avg_matching_parity(n, k, l)^d.
Rational matching_inner_average(std::int64_t n, std::int64_t k, std::int64_t l, std::int64_t d);

enum class MomentModel { pairing, matching };

/// Summand table T[k][l] = 2^-n C(n,k) C(n-k,l) * inner(k, l); entries with
/// k + l > n are zero. The ensemble average is the sum of all entries.
std::vector<std::vector<Rational>> m2_term_table(MomentModel model, std::int64_t n, std::int64_t d,
                                                 unsigned threads = 1);

/// Exact E_{G, theta}[m2] over the pairing model. n*d even, n <= 64, d <= 8.
Rational exact_avg_m2_pairing(std::int64_t n, std::int64_t d, unsigned threads = 1);

/// Exact E_{G, theta}[m2] over the matching model. n even, n <= 64, d <= 8.
Rational exact_avg_m2_matching(std::int64_t n, std::int64_t d, unsigned threads = 1);

/// Double-precision evaluation of the same sums for sweeps. The inner
/// averages are rounded once from their exact values and the outer sum is
/// accumulated in long double.
double approx_avg_m2(MomentModel model, std::int64_t n, std::int64_t d, unsigned threads = 1);

enum class M2Mode { statmech, statevector };

/// Angle Monte Carlo of m2(g, theta) with the state-vector simulator.
MomentEstimate mc_angle_m2(const Graph& g, std::uint64_t angle_samples, Seed seed, unsigned threads = 1);

/// Ensemble Monte Carlo. In statmech mode each sampled graph contributes its
/// exact angle average; in statevector mode the mean of m2 over
/// `angle_samples` random angle vectors. Sample i uses derive_seed(seed, i),
/// so the estimate does not depend on `threads`.
MomentEstimate mc_avg_m2(const EnsembleSpec& spec, std::uint64_t samples, M2Mode mode,
                         std::uint64_t angle_samples = 1, unsigned threads = 1);

}  // namespace rgs
