#pragma once

// Graph and multigraph types, random regular-graph ensembles, structured
// constructors (grids, sparsified grids) and the graph-state measurement
// rewrite rules (local complementation, Pauli Y/Z measurement).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rgs/bitmatrix.hpp"
#include "rgs/random.hpp"

namespace rgs {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Vertex count plus an edge multiset. Self-loops (u == v) and repeated pairs
/// are allowed; each pair is stored with u <= v.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t n) : n_(n) {}
  Multigraph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  /// Edge multiset, sorted lexicographically with u <= v.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }

  void add_edge(Vertex u, Vertex v);

  /// Incident half-edge count; a self-loop contributes 2.
  std::size_t degree(Vertex v) const;
  std::size_t multiplicity(Vertex u, Vertex v) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;  // kept sorted
};

/// Simple undirected graph with a bit-packed adjacency matrix.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  Graph(std::size_t n, const std::vector<Edge>& edges);
  /// Adopts `adjacency`; throws unless it is symmetric with zero diagonal.
  explicit Graph(BitMatrix adjacency);

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const;
  const BitMatrix& adjacency() const { return adj_; }

  bool has_edge(Vertex u, Vertex v) const { return adj_.get(u, v); }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex v) const { return adj_.row_popcount(v); }
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Sorted u < v list.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  BitMatrix adj_;
};

enum class EnsembleModel { pairing, matching, uniform_regular, erdos_renyi };

std::string to_string(EnsembleModel model);
EnsembleModel parse_ensemble_model(const std::string& name);

/// Parameters of a random graph ensemble. `degree` is used by the regular
/// models, `edge_probability` by Erdos-Renyi.
struct EnsembleSpec {
  EnsembleModel model = EnsembleModel::pairing;
  std::size_t n = 0;
  std::size_t degree = 0;
  double edge_probability = 0.5;
  Seed seed = kDefaultSeed;

  /// Throws std::invalid_argument when the parity/size constraints fail.
  void validate() const;
};

/// Raised when rejection sampling runs out of attempts.
class SamplingBudgetExhausted : public std::runtime_error {
 public:
  explicit SamplingBudgetExhausted(std::uint64_t attempts);
  std::uint64_t attempts() const { return attempts_; }

 private:
  std::uint64_t attempts_;
};

/// A perfect matching on the n*d half-edges; half-edge h belongs to vertex
/// h / d and partner[h] is the half-edge it is paired with.
struct PairingConfiguration {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::uint32_t> partner;

  Multigraph to_multigraph() const;
};

PairingConfiguration sample_pairing_configuration(std::size_t n, std::size_t d, Rng& rng);

/// Configuration (pairing) model: uniform perfect matching of n*d half-edges.
Multigraph sample_pairing(std::size_t n, std::size_t d, Seed seed);
Multigraph sample_pairing(std::size_t n, std::size_t d, Rng& rng);

/// Uniform perfect matching on [n] (random permutation, consecutive pairs).
std::vector<Edge> sample_perfect_matching(std::size_t n, Rng& rng);

/// Union with multiplicity of d independent uniform perfect matchings.
Multigraph sample_matching_model(std::size_t n, std::size_t d, Seed seed);
Multigraph sample_matching_model(std::size_t n, std::size_t d, Rng& rng);

/// Multiplicities reduced mod 2, self-loops dropped.
Graph simplify(const Multigraph& g);

bool is_simple(const Multigraph& g);

inline constexpr std::size_t kMaxUniformRegularDegree = 4;
inline constexpr std::uint64_t kDefaultRegularAttempts = 1'000'000;

/// Uniform simple d-regular graph by rejection from the pairing model.
Graph sample_uniform_regular(std::size_t n, std::size_t d, Seed seed,
                             std::uint64_t max_attempts = kDefaultRegularAttempts);
Graph sample_uniform_regular(std::size_t n, std::size_t d, Rng& rng,
                             std::uint64_t max_attempts = kDefaultRegularAttempts);

Graph sample_erdos_renyi(std::size_t n, double p, Seed seed);
Graph sample_erdos_renyi(std::size_t n, double p, Rng& rng);

/// Draws one simple graph from the ensemble (pairing and matching outputs are
/// simplified mod 2).
Graph sample_graph(const EnsembleSpec& spec, Rng& rng);

// Structured graphs.

/// L x L grid; vertex (r, c) has label r * L + c.
Graph grid_graph(std::size_t side);

/// One subdivided grid edge: endpoints in the underlying grid plus the
/// inserted path vertices in order from `from` to `to`.
struct SubdividedLine {
  Vertex from = 0;
  Vertex to = 0;
  std::vector<Vertex> inserted;
};

struct SparsifiedGrid {
  Graph graph;
  std::size_t side = 0;
  std::vector<SubdividedLine> lines;
};

/// L x L grid with every edge replaced by a path through L - 1 new vertices.
/// Grid vertices keep labels [0, L^2); inserted vertices follow.
SparsifiedGrid sparsified_grid_layout(std::size_t side);
Graph sparsified_grid_graph(std::size_t side);

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t n);  // center 0
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complement(const Graph& g);

/// Relabels vertex i to perm[i].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

// Graph-state rewrite rules.

/// Complements the edge set inside N(v).
Graph local_complement(const Graph& g, Vertex v);

enum class PauliBasis { Y, Z };

struct MeasurementResult {
  Graph graph;
  /// old label -> new label, std::nullopt for the measured vertex. Labels above
  /// the measured vertex shift down by one; labels below are unchanged.
  std::vector<std::optional<Vertex>> label_map;
};

/// Z: delete v. Y: local complement at v, then delete v.
MeasurementResult measure_pauli(const Graph& g, Vertex v, PauliBasis basis);

/// Exact isomorphism test by degree-refined backtracking.
bool are_isomorphic(const Graph& a, const Graph& b);

struct SparseGridReduction {
  Graph reduced;
  /// Measured vertices, labelled in the graph as it was when each was measured.
  std::vector<Vertex> y_sequence;
  bool isomorphic_to_grid = false;
};

/// Y-measures every vertex labelled >= L^2 (highest label first, so the
/// remaining labels never shift) and compares the result with grid_graph(L).
SparseGridReduction reduce_sparsified_grid(const Graph& g, std::size_t side);

}  // namespace rgs
