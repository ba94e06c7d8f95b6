#include "rgs/entanglement.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "rgs/stats.hpp"

namespace rgs {

namespace {

// Column space of A[T] tracked while T grows one vertex at a time. Every
// stored vector is a combination of full columns A[:, u], u in T. Pivot
// vectors are in reduced echelon form on the coordinates in T; kernel vectors
// vanish on T.
struct ColumnSpace {
  std::array<Word, kMaxExhaustiveDeficiency> pivot_vec{};
  std::array<Word, kMaxExhaustiveDeficiency> pivot_bit{};
  std::array<Word, kMaxExhaustiveDeficiency> kernel{};
  std::size_t pivots = 0;
  std::size_t kernels = 0;
  std::size_t size = 0;
  Word mask = 0;

  std::size_t deficiency() const { return size - pivots; }

  void add_pivot(Word vec, Word bit) {
    for (std::size_t i = 0; i < pivots; ++i)
      if (pivot_vec[i] & bit) pivot_vec[i] ^= vec;
    pivot_vec[pivots] = vec;
    pivot_bit[pivots] = bit;
    ++pivots;
  }

  void add(std::size_t v, Word column) {
    const Word bit = Word{1} << v;
    mask |= bit;
    ++size;

    // The new row may lift one kernel vector into the column space.
    std::size_t lift = kernels;
    for (std::size_t i = 0; i < kernels; ++i) {
      if (!(kernel[i] & bit)) continue;
      if (lift == kernels)
        lift = i;
      else
        kernel[i] ^= kernel[lift];
    }
    if (lift != kernels) {
      const Word vec = kernel[lift];
      kernel[lift] = kernel[--kernels];
      add_pivot(vec, bit);
    }

    Word x = column;
    for (std::size_t i = 0; i < pivots; ++i)
      if (x & pivot_bit[i]) x ^= pivot_vec[i];
    if ((x & mask) == 0) {
      kernel[kernels++] = x;
    } else {
      const Word low = (x & mask) & (~(x & mask) + 1);
      add_pivot(x, low);
    }
  }
};

struct ExhaustiveSearch {
  std::size_t n = 0;
  std::vector<Word> columns;
  std::size_t best = 0;
  Word best_mask = 0;

  void run(const ColumnSpace& state, std::size_t next) {
    const std::size_t d = state.deficiency();
    if (d > best) {
      best = d;
      best_mask = state.mask;
    }
    if (next == n || d + (n - next) <= best) return;
    ColumnSpace with = state;
    with.add(next, columns[next]);
    run(with, next + 1);
    run(state, next + 1);
  }
};

std::vector<Vertex> mask_to_set(Word mask) {
  std::vector<Vertex> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
  return out;
}

// Greedy minimum-degree independent set; its deficiency equals its size.
std::vector<Vertex> greedy_independent_set(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> alive(n, true);
  std::vector<Vertex> out;
  for (;;) {
    std::size_t pick = n, best_deg = n + 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      std::size_t deg = 0;
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) deg += alive[u] ? 1 : 0;
      if (deg < best_deg) {
        best_deg = deg;
        pick = v;
      }
    }
    if (pick == n) break;
    out.push_back(static_cast<Vertex>(pick));
    alive[pick] = false;
    for (Vertex u : g.neighbors(static_cast<Vertex>(pick))) alive[u] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

DeficiencyResult exhaustive_deficiency(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxExhaustiveDeficiency)
    throw std::invalid_argument("exhaustive deficiency search is limited to " +
                                std::to_string(kMaxExhaustiveDeficiency) + " vertices");
  ExhaustiveSearch search;
  search.n = n;
  for (std::size_t v = 0; v < n; ++v) search.columns.push_back(g.adjacency().row_word(v));
  for (Vertex v : greedy_independent_set(g)) search.best_mask |= Word{1} << v;
  search.best = static_cast<std::size_t>(std::popcount(search.best_mask));
  search.run(ColumnSpace{}, 0);
  return {mask_to_set(search.best_mask), search.best, SearchMode::exhaustive};
}

std::size_t deficiency_of_flags(const Graph& g, const std::vector<char>& in) {
  std::vector<Vertex> subset;
  for (std::size_t v = 0; v < in.size(); ++v)
    if (in[v]) subset.push_back(static_cast<Vertex>(v));
  return rank_deficiency(g, subset);
}

DeficiencyResult heuristic_deficiency(const Graph& g, std::uint64_t restarts, Seed seed) {
  const std::size_t n = g.num_vertices();
  DeficiencyResult result;
  result.method = SearchMode::heuristic;
  result.best_set = greedy_independent_set(g);
  result.deficiency = result.best_set.size();
  if (n == 0) return result;
  if (restarts == 0) restarts = 4 * n;

  const auto interval = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n)))));
  const std::size_t intervals = (n + interval - 1) / interval;
  const std::uint64_t steps = 2ULL * n * n;

  for (std::uint64_t r = 0; r < restarts; ++r) {
    Rng rng = make_rng(derive_seed(seed, r));
    std::vector<char> in(n, 0);
    if (r % 2 == 0) {
      for (auto& f : in) f = static_cast<char>(rng() & 1U);
    } else {
      // Union of a random half of the length-sqrt(n) intervals.
      std::vector<std::size_t> order(intervals);
      for (std::size_t i = 0; i < intervals; ++i) order[i] = i;
      shuffle(std::span<std::size_t>(order), rng);
      for (std::size_t i = 0; i < (intervals + 1) / 2; ++i)
        for (std::size_t v = order[i] * interval; v < std::min(n, (order[i] + 1) * interval); ++v) in[v] = 1;
    }
    std::size_t current = deficiency_of_flags(g, in);
    for (std::uint64_t s = 0; s < steps; ++s) {
      const auto v = static_cast<std::size_t>(uniform_below(rng, n));
      in[v] ^= 1;
      const std::size_t next = deficiency_of_flags(g, in);
      if (next >= current) {
        current = next;
        if (current > result.deficiency) {
          result.deficiency = current;
          result.best_set.clear();
          for (std::size_t u = 0; u < n; ++u)
            if (in[u]) result.best_set.push_back(static_cast<Vertex>(u));
        }
      } else {
        in[v] ^= 1;
      }
    }
  }
  return result;
}

QubitState random_qubit(Rng& rng) {
  std::normal_distribution<double> normal;
  for (;;) {
    QubitState q{Complex(normal(rng), normal(rng)), Complex(normal(rng), normal(rng))};
    const double norm = std::sqrt(std::norm(q[0]) + std::norm(q[1]));
    if (norm > 1e-12) return {q[0] / norm, q[1] / norm};
  }
}

// conj(prod_k alpha_k(x_k)) for every x, skipping qubit `skip` (if < n).
std::vector<Complex> conj_product(const ProductState& alpha, std::size_t skip) {
  std::vector<Complex> out(std::size_t{1} << alpha.size());
  out[0] = 1.0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    const std::size_t bit = std::size_t{1} << j;
    const Complex c0 = j == skip ? Complex(1.0) : std::conj(alpha[j][0]);
    const Complex c1 = j == skip ? Complex(1.0) : std::conj(alpha[j][1]);
    for (std::size_t x = 0; x < bit; ++x) {
      out[x | bit] = out[x] * c1;
      out[x] *= c0;
    }
  }
  return out;
}

double run_als(ProductState& alpha, const std::vector<Complex>& psi, double tol, std::uint64_t& sweeps) {
  const std::size_t n = alpha.size();
  double overlap = product_overlap(alpha, psi);
  constexpr std::uint64_t kMaxSweeps = 10'000;
  for (std::uint64_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
    ++sweeps;
    for (std::size_t j = 0; j < n; ++j) {
      const std::vector<Complex> weights = conj_product(alpha, j);
      Complex e0 = 0.0, e1 = 0.0;
      const std::size_t bit = std::size_t{1} << j;
      for (std::size_t x = 0; x < psi.size(); ++x) {
        if (x & bit)
          e1 += weights[x] * psi[x];
        else
          e0 += weights[x] * psi[x];
      }
      const double norm = std::sqrt(std::norm(e0) + std::norm(e1));
      if (norm > 0.0) alpha[j] = {e0 / norm, e1 / norm};
    }
    const double next = product_overlap(alpha, psi);
    const double gain = next - overlap;
    overlap = std::max(overlap, next);
    if (gain < tol) break;
  }
  return overlap;
}

}  // namespace

std::string to_string(SearchMode mode) { return mode == SearchMode::exhaustive ? "exhaustive" : "heuristic"; }

SearchMode parse_search_mode(const std::string& name) {
  if (name == "exhaustive") return SearchMode::exhaustive;
  if (name == "heuristic") return SearchMode::heuristic;
  throw std::invalid_argument("unknown search mode: " + name);
}

std::string to_string(AlsInit init) { return init == AlsInit::random ? "random" : "real-stabilizer"; }

AlsInit parse_als_init(const std::string& name) {
  if (name == "random") return AlsInit::random;
  if (name == "real-stabilizer" || name == "real_stabilizer") return AlsInit::real_stabilizer;
  throw std::invalid_argument("unknown ALS init: " + name);
}

std::size_t rank_deficiency(const Graph& g, const std::vector<Vertex>& subset) {
  std::vector<std::size_t> idx(subset.begin(), subset.end());
  return idx.size() - rank_gf2(principal_submatrix(g.adjacency(), idx));
}

DeficiencyResult max_rank_deficiency(const Graph& g, SearchMode mode, std::uint64_t budget, Seed seed) {
  return mode == SearchMode::exhaustive ? exhaustive_deficiency(g) : heuristic_deficiency(g, budget, seed);
}

double real_stab_entanglement_bound(const Graph& g, SearchMode mode, std::uint64_t budget, Seed seed) {
  const DeficiencyResult r = max_rank_deficiency(g, mode, budget, seed);
  return static_cast<double>(g.num_vertices() - r.deficiency);
}

double product_overlap(const ProductState& alpha, const std::vector<Complex>& psi) {
  if (psi.size() != (std::size_t{1} << alpha.size())) throw std::invalid_argument("product_overlap: size mismatch");
  const std::vector<Complex> weights = conj_product(alpha, alpha.size());
  Complex amp = 0.0;
  for (std::size_t x = 0; x < psi.size(); ++x) amp += weights[x] * psi[x];
  return std::norm(amp);
}

ProductState real_stabilizer_state(const Graph& g, const std::vector<Vertex>& subset) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxAlsQubits) throw std::invalid_argument("real_stabilizer_state is limited to 12 qubits");
  const std::vector<Complex> psi = graph_state_vector(g);
  const std::size_t k = subset.size();

  // Amplitudes with the qubits outside S fixed to 0, indexed by the bits of S,
  // then transformed to the X basis on S.
  std::vector<Complex> local(std::size_t{1} << k);
  for (std::size_t y = 0; y < local.size(); ++y) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((y >> i) & 1U) x |= std::size_t{1} << subset[i];
    local[y] = psi[x];
  }
  walsh_hadamard(local);
  std::size_t best = 0;
  for (std::size_t s = 1; s < local.size(); ++s)
    if (std::abs(local[s]) > std::abs(local[best]) + 1e-12) best = s;

  const double h = 1.0 / std::sqrt(2.0);
  ProductState alpha(n, QubitState{Complex(1.0), Complex(0.0)});
  for (std::size_t i = 0; i < k; ++i) {
    const double sign = ((best >> i) & 1U) ? -1.0 : 1.0;
    alpha[subset[i]] = {Complex(h), Complex(sign * h)};
  }
  return alpha;
}

AlsResult als_product_overlap(const Graph& g, std::uint64_t restarts, AlsInit init, double tol, Seed seed) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxAlsQubits) throw std::invalid_argument("ALS is limited to 12 qubits");
  if (restarts == 0) restarts = 1;
  const std::vector<Complex> psi = graph_state_vector(g);

  AlsResult best;
  best.overlap = -1.0;
  for (std::uint64_t r = 0; r < restarts; ++r) {
    Rng rng = make_rng(derive_seed(seed, r));
    ProductState alpha;
    if (r == 0 && init == AlsInit::real_stabilizer) {
      alpha = real_stabilizer_state(g, exhaustive_deficiency(g).best_set);
    } else {
      alpha.resize(n);
      for (auto& q : alpha) q = random_qubit(rng);
    }
    std::uint64_t sweeps = 0;
    const double overlap = run_als(alpha, psi, tol, sweeps);
    if (overlap > best.overlap) {
      best.overlap = overlap;
      best.state = std::move(alpha);
    }
    best.sweeps += sweeps;
  }
  return best;
}

RankDistribution rank_distribution_exact(std::size_t n) {
  if (n > kMaxRankDistribution)
    throw std::invalid_argument("rank_distribution_exact is limited to n <= " + std::to_string(kMaxRankDistribution));
  RankDistribution dist;
  dist.n = n;
  const BigInt base_den = pow2(n * (n - (n > 0 ? 1 : 0)) / 2);
  Rational gauss = 1;   // prod_{i<=h} 2^{2i-2} / (2^{2i} - 1)
  BigInt falling = 1;   // prod_{i<2h} (2^{n-i} - 1)
  for (std::size_t h = 0; 2 * h <= n; ++h) {
    if (h > 0) {
      gauss *= Rational(pow2(2 * h - 2), pow2(2 * h) - 1);
      falling *= (pow2(n - (2 * h - 2)) - 1) * (pow2(n - (2 * h - 1)) - 1);
    }
    Rational p = gauss * Rational(falling, base_den);
    p.canonicalize();
    dist.probs.push_back(p);
  }
  return dist;
}

std::vector<double> rank_probabilities(const RankDistribution& dist) {
  std::vector<double> out;
  out.reserve(dist.probs.size());
  for (const auto& p : dist.probs) out.push_back(to_double(p));
  return out;
}

GaussianBounds rank_distribution_gaussian_bounds(std::size_t n, std::size_t h) {
  if (2 * h > n) throw std::invalid_argument("gaussian bounds need 2h <= n");
  const double t = static_cast<double>(n - 2 * h);
  const double kernel = std::exp2(-t * t / 2.0 + t / 2.0);
  return {std::exp(-2.0) / 4.0 * kernel, std::exp(2.0 / 3.0) * kernel};
}

double deficiency_tail_bound(std::size_t t) {
  const double x = static_cast<double>(t);
  return std::exp(-2.0) / 4.0 * std::exp2(-x * x / 2.0 - x / 2.0);
}

std::vector<std::uint64_t> sample_rank_histogram(std::size_t n, std::uint64_t samples, Seed seed, unsigned threads) {
  std::vector<std::size_t> half_rank(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    half_rank[i] = rank_gf2(sample_adjacency(n, derive_seed(seed, i))) / 2;
  });
  std::vector<std::uint64_t> hist(n / 2 + 1, 0);
  for (std::size_t h : half_rank) ++hist[h];
  return hist;
}

}  // namespace rgs
