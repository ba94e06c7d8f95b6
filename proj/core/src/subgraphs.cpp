#include "rgs/subgraphs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rgs/graph_json.hpp"

namespace rgs {

namespace {

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == n;
}

// Bit index of the pair (i, j), i < j, among the C(v, 2) pairs of [v].
constexpr std::size_t pair_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

// Adjacency code of the subgraph induced on `verts` (taken in the given order).
std::uint32_t induced_code(const Graph& g, const Vertex* verts, std::size_t v) {
  std::uint32_t code = 0;
  for (std::size_t j = 1; j < v; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (g.has_edge(verts[i], verts[j])) code |= std::uint32_t{1} << pair_index(i, j);
  return code;
}

// Marks the adjacency code of every labelling of the pattern.
std::vector<bool> labelled_codes(const Graph& pattern) {
  const std::size_t v = pattern.num_vertices();
  std::vector<bool> table(std::size_t{1} << (v * (v - (v > 0 ? 1 : 0)) / 2), false);
  std::vector<Vertex> perm(v);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    // Position i of the host subset plays pattern vertex perm[i].
    table[induced_code(pattern, perm.data(), v)] = true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return table;
}

// ESU enumeration of connected vertex sets of size k, each exactly once.
class ConnectedSubsets {
 public:
  ConnectedSubsets(const Graph& g, std::size_t k, const std::vector<bool>& table)
      : g_(g), k_(k), table_(table), adjacency_(g.num_vertices()) {
    for (std::size_t u = 0; u < g.num_vertices(); ++u) adjacency_[u] = g.neighbors(static_cast<Vertex>(u));
  }

  std::uint64_t count() {
    hits_ = 0;
    for (std::size_t v = 0; v < g_.num_vertices(); ++v) {
      root_ = static_cast<Vertex>(v);
      chosen_.assign(1, root_);
      std::vector<Vertex> ext;
      for (Vertex u : adjacency_[v])
        if (u > root_) ext.push_back(u);
      extend(ext);
    }
    return hits_;
  }

 private:
  bool touches_chosen(Vertex u) const {
    for (Vertex c : chosen_)
      if (c == u || g_.has_edge(c, u)) return true;
    return false;
  }

  void extend(std::vector<Vertex> ext) {
    if (chosen_.size() == k_) {
      std::array<Vertex, kMaxPatternVertices> sorted{};
      std::copy(chosen_.begin(), chosen_.end(), sorted.begin());
      std::sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k_));
      if (table_[induced_code(g_, sorted.data(), k_)]) ++hits_;
      return;
    }
    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      for (Vertex u : adjacency_[w])
        if (u > root_ && !touches_chosen(u) && std::find(next.begin(), next.end(), u) == next.end())
          next.push_back(u);
      chosen_.push_back(w);
      extend(std::move(next));
      chosen_.pop_back();
    }
  }

  const Graph& g_;
  std::size_t k_;
  const std::vector<bool>& table_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Vertex> chosen_;
  Vertex root_ = 0;
  std::uint64_t hits_ = 0;
};

std::uint64_t count_all_subsets(const Graph& host, std::size_t v, const std::vector<bool>& table) {
  const std::size_t n = host.num_vertices();
  const BigInt subsets = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(v));
  if (subsets > BigInt(static_cast<unsigned long>(kInducedSubsetBudget)))
    throw BudgetExceeded("count_induced: C(" + std::to_string(n) + ", " + std::to_string(v) +
                         ") subsets exceed the enumeration budget");
  std::uint64_t hits = 0;
  std::array<Vertex, kMaxPatternVertices> idx{};
  for (std::size_t i = 0; i < v; ++i) idx[i] = static_cast<Vertex>(i);
  if (v > n) return 0;
  for (;;) {
    if (table[induced_code(host, idx.data(), v)]) ++hits;
    // next combination in lexicographic order
    std::size_t i = v;
    while (i > 0 && idx[i - 1] == n - v + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < v; ++j) idx[j] = idx[j - 1] + 1;
  }
  return hits;
}

std::size_t parse_size(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(text, &used);
    if (used != text.size()) throw std::invalid_argument(spec);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad pattern size in '" + spec + "'");
  }
}

}  // namespace

PatternGraph make_pattern(Graph g, std::string name) {
  PatternGraph p;
  p.name = std::move(name);
  p.v = g.num_vertices();
  p.e = g.num_edges();
  if (p.v <= kMaxAutomorphismVertices) p.aut = automorphism_count(g);
  if (p.v <= kMaxDensityVertices) p.density = graph_density(g);
  p.graph = std::move(g);
  return p;
}

PatternGraph parse_pattern(const std::string& spec) {
  if (spec == "c4") return make_pattern(cycle_graph(4), spec);
  if (spec == "triangle") return make_pattern(complete_graph(3), spec);
  if (spec == "path3") return make_pattern(path_graph(3), spec);
  if (spec == "k4") return make_pattern(complete_graph(4), spec);
  if (spec == "edge") return make_pattern(complete_graph(2), spec);
  if (spec == "nonedge") return make_pattern(empty_graph(2), spec);

  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::size_t k = parse_size(spec.substr(colon + 1), spec);
    if (kind == "empty") return make_pattern(empty_graph(k), spec);
    if (kind == "complete") return make_pattern(complete_graph(k), spec);
    if (kind == "cycle") return make_pattern(cycle_graph(k), spec);
    if (kind == "path") return make_pattern(path_graph(k), spec);
    if (kind == "star") return make_pattern(star_graph(k), spec);
    if (kind == "grid") return make_pattern(grid_graph(k), spec);
    if (kind == "sparsegrid") return make_pattern(sparsified_grid_graph(k), spec);
  }
  return make_pattern(load_graph(spec), spec);
}

std::uint64_t count_induced(const Graph& host, const PatternGraph& pattern) {
  const std::size_t v = pattern.graph.num_vertices();
  if (v > kMaxPatternVertices)
    throw BudgetExceeded("count_induced supports patterns with at most " + std::to_string(kMaxPatternVertices) +
                         " vertices");
  if (v > host.num_vertices()) return 0;
  if (v == 0) return 1;
  const std::vector<bool> table = labelled_codes(pattern.graph);
  if (is_connected(pattern.graph)) return ConnectedSubsets(host, v, table).count();
  return count_all_subsets(host, v, table);
}

std::uint64_t automorphism_count(const Graph& pattern) {
  const std::size_t v = pattern.num_vertices();
  if (v > kMaxAutomorphismVertices)
    throw std::invalid_argument("automorphism_count supports at most " + std::to_string(kMaxAutomorphismVertices) +
                                " vertices");
  std::vector<Vertex> perm(v);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t count = 0;
  do {
    bool preserved = true;
    for (std::size_t i = 0; i < v && preserved; ++i)
      for (std::size_t j = i + 1; j < v && preserved; ++j)
        preserved = pattern.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) == pattern.has_edge(perm[i], perm[j]);
    if (preserved) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Rational graph_density(const Graph& pattern) {
  const std::size_t v = pattern.num_vertices();
  if (v > kMaxDensityVertices)
    throw std::invalid_argument("graph_density supports at most " + std::to_string(kMaxDensityVertices) + " vertices");
  Rational best = 0;
  const auto edges = pattern.edges();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << v); ++mask) {
    long e = 0;
    for (const auto& [a, b] : edges)
      if (((mask >> a) & 1U) && ((mask >> b) & 1U)) ++e;
    Rational ratio(e, static_cast<unsigned long>(std::popcount(mask)));
    ratio.canonicalize();
    if (ratio > best) best = ratio;
  }
  return best;
}

double expected_induced_count(std::size_t n, std::size_t d, const PatternGraph& pattern) {
  if (d >= n) throw std::invalid_argument("expected_induced_count needs d < n");
  if (!pattern.aut) throw std::invalid_argument("expected_induced_count needs a pattern with at most 8 vertices");
  const double p = static_cast<double>(d) / static_cast<double>(n);
  const std::size_t pairs = pattern.v * (pattern.v - (pattern.v > 0 ? 1 : 0)) / 2;
  const double labelled = to_double(Rational(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(pattern.v)) *
                                             factorial(static_cast<std::int64_t>(pattern.v))));
  return labelled / static_cast<double>(*pattern.aut) * std::pow(p, static_cast<double>(pattern.e)) *
         std::pow(1.0 - p, static_cast<double>(pairs - pattern.e));
}

LeadingProbability induced_probability_leading(std::size_t n, std::size_t d, std::size_t s, std::size_t s_bar) {
  if (n == 0 || d > n) throw std::invalid_argument("induced_probability_leading needs 0 <= d <= n, n > 0");
  const double p = static_cast<double>(d) / static_cast<double>(n);
  LeadingProbability out;
  out.value = std::pow(p, static_cast<double>(s)) * std::pow(1.0 - p, static_cast<double>(s_bar));
  out.hypothesis_ratio = d == 0 ? (s * s_bar == 0 ? 0.0 : INFINITY)
                                : static_cast<double>(s * s_bar) / static_cast<double>(d);
  return out;
}

MomentEstimate mc_induced_count(std::size_t n, std::size_t d, const PatternGraph& pattern, std::uint64_t samples,
                                Seed seed, unsigned threads) {
  if (d > kMaxUniformRegularDegree) throw std::invalid_argument("mc_induced_count needs d <= 4");
  if (pattern.v > 4) throw std::invalid_argument("mc_induced_count needs a pattern with at most 4 vertices");
  if (n > 300) throw std::invalid_argument("mc_induced_count needs n <= 300");
  return monte_carlo(samples, seed, threads, [&](std::uint64_t, Seed s) {
    Rng rng = make_rng(s);
    return static_cast<double>(count_induced(sample_uniform_regular(n, d, rng), pattern));
  });
}

}  // namespace rgs
