#pragma once

// Geometric-entanglement bounds for graph states from GF(2) rank deficiency,
// the exact rank law of random adjacency matrices, and an alternating
// product-state optimizer used as an independent check.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rgs/exact.hpp"
#include "rgs/graph.hpp"
#include "rgs/statevector.hpp"

namespace rgs {

inline constexpr std::size_t kMaxExhaustiveDeficiency = 22;
inline constexpr std::size_t kMaxAlsQubits = 12;
inline constexpr std::size_t kMaxRankDistribution = 200;

enum class SearchMode { exhaustive, heuristic };

std::string to_string(SearchMode mode);
SearchMode parse_search_mode(const std::string& name);

struct DeficiencyResult {
  std::vector<Vertex> best_set;  // ascending
  std::size_t deficiency = 0;
  SearchMode method = SearchMode::exhaustive;
};

/// |S| - rank(A[S]) over GF(2).
std::size_t rank_deficiency(const Graph& g, const std::vector<Vertex>& subset);

/// max_S (|S| - rank A[S]). Exhaustive mode needs n <= 22 and ignores budget
/// and seed. Heuristic mode runs `budget` hill-climbing restarts.
DeficiencyResult max_rank_deficiency(const Graph& g, SearchMode mode, std::uint64_t budget = 0,
                                     Seed seed = kDefaultSeed);

/// n - max_S(|S| - rank A[S]): -log2 of the best overlap of |G> with a real
/// stabilizer product state, and an upper bound on its geometric entanglement.
double real_stab_entanglement_bound(const Graph& g, SearchMode mode = SearchMode::exhaustive,
                                    std::uint64_t budget = 0, Seed seed = kDefaultSeed);

/// One unit vector (amplitudes of |0>, |1>) per qubit.
using QubitState = std::array<Complex, 2>;
using ProductState = std::vector<QubitState>;

/// |<alpha|psi>|^2 for a product state alpha and an n-qubit state vector psi.
double product_overlap(const ProductState& alpha, const std::vector<Complex>& psi);

/// Real stabilizer product state with overlap 2^-(n - |S| + rank A[S]):
/// X eigenstates on S, |0> elsewhere, signs chosen to maximize the overlap.
ProductState real_stabilizer_state(const Graph& g, const std::vector<Vertex>& subset);

enum class AlsInit { random, real_stabilizer };

std::string to_string(AlsInit init);
AlsInit parse_als_init(const std::string& name);

struct AlsResult {
  ProductState state;
  double overlap = 0.0;
  std::uint64_t sweeps = 0;
};

/// Alternating maximization of |<alpha|G>|^2 over product states. Each update
/// replaces one qubit by its normalized environment vector. A sweep visits all
/// qubits; a restart stops when a sweep improves the overlap by less than tol.
/// With init = real_stabilizer the first restart starts from the optimal real
/// stabilizer product state and the others from random states. n <= 12.
AlsResult als_product_overlap(const Graph& g, std::uint64_t restarts, AlsInit init, double tol, Seed seed);

// Rank law of uniformly random symmetric zero-diagonal n x n matrices.

struct RankDistribution {
  std::size_t n = 0;
  std::vector<Rational> probs;  // probs[h] = P(rank = 2h), h = 0..floor(n/2)
};

RankDistribution rank_distribution_exact(std::size_t n);

/// Probability of deficiency n - 2h as a double vector indexed by h.
std::vector<double> rank_probabilities(const RankDistribution& dist);

struct GaussianBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// (e^-2/4) K and e^{2/3} K with K = 2^{-(n-2h)^2/2 + (n-2h)/2}.
GaussianBounds rank_distribution_gaussian_bounds(std::size_t n, std::size_t h);

/// (e^-2/4) 2^{-t^2/2 - t/2}.
double deficiency_tail_bound(std::size_t t);

/// Histogram of rank/2 over `samples` matrices from sample_adjacency, each
/// sample seeded with derive_seed(seed, i).
std::vector<std::uint64_t> sample_rank_histogram(std::size_t n, std::uint64_t samples, Seed seed,
                                                 unsigned threads = 1);

// Rank-deficiency Markov chain: deficiency i moves to i+1 with probability
// 2^-i and to i-1 otherwise.

inline constexpr std::size_t kDefaultDeficiencyCap = 64;

enum class Parity { even, odd };

struct RankDeficiencyChain {
  std::vector<double> dist;  // states 0..D_cap
  double leak = 0.0;         // mass pushed above D_cap
  Parity parity = Parity::even;

  std::size_t cap() const { return dist.empty() ? 0 : dist.size() - 1; }
  double total() const;
};

RankDeficiencyChain point_mass(std::size_t state, std::size_t cap = kDefaultDeficiencyCap);

RankDeficiencyChain markov_step(const RankDeficiencyChain& chain);

/// Stationary law of the two-step chain on one parity class, normalized
/// numerically. cap >= 8.
RankDeficiencyChain stationary_deficiency(Parity parity, std::size_t cap = kDefaultDeficiencyCap);

struct GrowthComparison {
  std::vector<double> chain;      // indexed by deficiency, length m0 + k + 1
  std::vector<double> empirical;  // same indexing
  double tv = 0.0;
};

/// Evolves the chain k steps from deficiency m0 - r0 and, independently, grows
/// `samples` random symmetric matrices from a fixed m0 x m0 seed matrix of rank
/// r0 by appending k uniform symmetric row/column pairs.
GrowthComparison markov_evolve_vs_growth(std::size_t r0, std::size_t m0, std::size_t k, std::uint64_t samples,
                                         Seed seed, unsigned threads = 1);

}  // namespace rgs
