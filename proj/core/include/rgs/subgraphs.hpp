#pragma once

// Induced-subgraph statistics: exact counting of small patterns, automorphism
// groups, graph density, and the leading-order expected counts in random
// d-regular graphs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "rgs/exact.hpp"
#include "rgs/graph.hpp"
#include "rgs/stats.hpp"

namespace rgs {

inline constexpr std::size_t kMaxPatternVertices = 6;
inline constexpr std::size_t kMaxAutomorphismVertices = 8;
inline constexpr std::size_t kMaxDensityVertices = 12;
/// Largest number of vertex subsets count_induced will scan when it cannot
/// restrict itself to connected subsets (C(300, 4) is about 3.3e8).
inline constexpr std::uint64_t kInducedSubsetBudget = 400'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PatternGraph {
  std::string name;
  Graph graph;
  std::size_t v = 0;
  std::size_t e = 0;
  std::optional<std::uint64_t> aut;  // set when v <= 8
  std::optional<Rational> density;   // set when v <= 12
};

PatternGraph make_pattern(Graph g, std::string name = "custom");

/// c4, triangle, path3, k4, edge, nonedge, empty:V, complete:V, cycle:V,
/// path:V, star:V, grid:L, sparsegrid:L, or a path to a graph JSON file.
PatternGraph parse_pattern(const std::string& spec);

/// Number of vertex subsets of `host` inducing a copy of the pattern.
/// Requires pattern.v <= 6.
std::uint64_t count_induced(const Graph& host, const PatternGraph& pattern);

/// Brute force over all v! permutations; v <= 8.
std::uint64_t automorphism_count(const Graph& pattern);

/// max over non-empty vertex subsets S of e(S)/|S|; v <= 12.
Rational graph_density(const Graph& pattern);

/// C(n,v) v!/aut(H) (d/n)^e (1 - d/n)^{C(v,2) - e}.
double expected_induced_count(std::size_t n, std::size_t d, const PatternGraph& pattern);

struct LeadingProbability {
  double value = 0.0;
  /// s * s_bar / d; the leading form is only justified when this is small.
  double hypothesis_ratio = 0.0;
};

/// (d/n)^s (1 - d/n)^{s_bar}.
LeadingProbability induced_probability_leading(std::size_t n, std::size_t d, std::size_t s, std::size_t s_bar);

/// Mean and standard error of count_induced over uniform random d-regular
/// graphs; d <= 4, pattern.v <= 4, n <= 300.
MomentEstimate mc_induced_count(std::size_t n, std::size_t d, const PatternGraph& pattern, std::uint64_t samples,
                                Seed seed, unsigned threads = 1);

}  // namespace rgs
