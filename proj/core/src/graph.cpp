#include "rgs/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace rgs {

// ---------------------------------------------------------------- Multigraph

Multigraph::Multigraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("Multigraph: endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

void Multigraph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("Multigraph: endpoint out of range");
  if (u > v) std::swap(u, v);
  const Edge e{u, v};
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

std::size_t Multigraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (const auto& [a, b] : edges_) d += static_cast<std::size_t>(a == v) + static_cast<std::size_t>(b == v);
  return d;
}

std::size_t Multigraph::multiplicity(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const Edge e{u, v};
  const auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
  return static_cast<std::size_t>(hi - lo);
}

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

Graph::Graph(BitMatrix adjacency) : adj_(std::move(adjacency)) {
  if (!adj_.is_symmetric() || !adj_.has_zero_diagonal())
    throw std::invalid_argument("Graph: adjacency must be symmetric with zero diagonal");
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (std::size_t v = 0; v < num_vertices(); ++v) twice += adj_.row_popcount(v);
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= num_vertices() || v >= num_vertices()) throw std::out_of_range("Graph: endpoint out of range");
  if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
  adj_.set_symmetric(u, v, true);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (u >= num_vertices() || v >= num_vertices()) throw std::out_of_range("Graph: endpoint out of range");
  adj_.set_symmetric(u, v, false);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
  adj_.flip(u, v);
  adj_.flip(v, u);
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const auto row = adj_.row(v);
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word bits = row[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

// ---------------------------------------------------------------- ensembles

std::string to_string(EnsembleModel model) {
  switch (model) {
    case EnsembleModel::pairing: return "pairing";
    case EnsembleModel::matching: return "matching";
    case EnsembleModel::uniform_regular: return "uniform-regular";
    case EnsembleModel::erdos_renyi: return "erdos-renyi";
  }
  return "unknown";
}

EnsembleModel parse_ensemble_model(const std::string& name) {
  if (name == "pairing") return EnsembleModel::pairing;
  if (name == "matching") return EnsembleModel::matching;
  if (name == "uniform-regular" || name == "uniform") return EnsembleModel::uniform_regular;
  if (name == "erdos-renyi" || name == "er") return EnsembleModel::erdos_renyi;
  throw std::invalid_argument("unknown ensemble model '" + name + "'");
}

void EnsembleSpec::validate() const {
  switch (model) {
    case EnsembleModel::pairing:
      if (degree < 1) throw std::invalid_argument("pairing model needs d >= 1");
      if ((n * degree) % 2 != 0) throw std::invalid_argument("pairing model needs n*d even");
      break;
    case EnsembleModel::matching:
      if (n % 2 != 0) throw std::invalid_argument("matching model needs n even");
      break;
    case EnsembleModel::uniform_regular:
      if ((n * degree) % 2 != 0) throw std::invalid_argument("uniform regular graphs need n*d even");
      if (degree >= n) throw std::invalid_argument("uniform regular graphs need d < n");
      if (degree > kMaxUniformRegularDegree)
        throw std::invalid_argument("uniform regular sampling is limited to d <= 4");
      break;
    case EnsembleModel::erdos_renyi:
      if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
      break;
  }
}

SamplingBudgetExhausted::SamplingBudgetExhausted(std::uint64_t attempts)
    : std::runtime_error("rejection sampling gave up after " + std::to_string(attempts) + " attempts"),
      attempts_(attempts) {}

Multigraph PairingConfiguration::to_multigraph() const {
  std::vector<Edge> edges;
  edges.reserve(partner.size() / 2);
  for (std::uint32_t h = 0; h < partner.size(); ++h)
    if (h < partner[h]) edges.emplace_back(static_cast<Vertex>(h / d), static_cast<Vertex>(partner[h] / d));
  return Multigraph(n, std::move(edges));
}

PairingConfiguration sample_pairing_configuration(std::size_t n, std::size_t d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("sample_pairing: d must be >= 1");
  if ((n * d) % 2 != 0) throw std::invalid_argument("sample_pairing: n*d must be even");
  std::vector<std::uint32_t> halves(n * d);
  std::iota(halves.begin(), halves.end(), 0U);
  shuffle(std::span<std::uint32_t>(halves), rng);

  PairingConfiguration cfg{n, d, std::vector<std::uint32_t>(n * d)};
  for (std::size_t i = 0; i + 1 < halves.size(); i += 2) {
    cfg.partner[halves[i]] = halves[i + 1];
    cfg.partner[halves[i + 1]] = halves[i];
  }
  return cfg;
}

Multigraph sample_pairing(std::size_t n, std::size_t d, Rng& rng) {
  return sample_pairing_configuration(n, d, rng).to_multigraph();
}

Multigraph sample_pairing(std::size_t n, std::size_t d, Seed seed) {
  Rng rng = make_rng(seed);
  return sample_pairing(n, d, rng);
}

std::vector<Edge> sample_perfect_matching(std::size_t n, Rng& rng) {
  if (n % 2 != 0) throw std::invalid_argument("perfect matching needs n even");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  shuffle(std::span<Vertex>(perm), rng);
  std::vector<Edge> out;
  out.reserve(n / 2);
  for (std::size_t i = 0; i + 1 < n; i += 2) out.emplace_back(perm[i], perm[i + 1]);
  return out;
}

Multigraph sample_matching_model(std::size_t n, std::size_t d, Rng& rng) {
  if (n % 2 != 0) throw std::invalid_argument("matching model needs n even");
  std::vector<Edge> edges;
  edges.reserve(n * d / 2);
  for (std::size_t round = 0; round < d; ++round) {
    auto m = sample_perfect_matching(n, rng);
    edges.insert(edges.end(), m.begin(), m.end());
  }
  return Multigraph(n, std::move(edges));
}

Multigraph sample_matching_model(std::size_t n, std::size_t d, Seed seed) {
  Rng rng = make_rng(seed);
  return sample_matching_model(n, d, rng);
}

Graph simplify(const Multigraph& g) {
  Graph out(g.num_vertices());
  for (const auto& [u, v] : g.edges())
    if (u != v) out.toggle_edge(u, v);
  return out;
}

bool is_simple(const Multigraph& g) {
  const auto& e = g.edges();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].first == e[i].second) return false;
    if (i > 0 && e[i] == e[i - 1]) return false;
  }
  return true;
}

Graph sample_uniform_regular(std::size_t n, std::size_t d, Rng& rng, std::uint64_t max_attempts) {
  EnsembleSpec{EnsembleModel::uniform_regular, n, d}.validate();
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    Multigraph m = sample_pairing(n, d, rng);
    if (is_simple(m)) return simplify(m);
  }
  throw SamplingBudgetExhausted(max_attempts);
}

Graph sample_uniform_regular(std::size_t n, std::size_t d, Seed seed, std::uint64_t max_attempts) {
  Rng rng = make_rng(seed);
  return sample_uniform_regular(n, d, rng, max_attempts);
}

Graph sample_erdos_renyi(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (uniform_unit(rng) < p) g.add_edge(u, v);
  return g;
}

Graph sample_erdos_renyi(std::size_t n, double p, Seed seed) {
  Rng rng = make_rng(seed);
  return sample_erdos_renyi(n, p, rng);
}

Graph sample_graph(const EnsembleSpec& spec, Rng& rng) {
  spec.validate();
  switch (spec.model) {
    case EnsembleModel::pairing: return simplify(sample_pairing(spec.n, spec.degree, rng));
    case EnsembleModel::matching: return simplify(sample_matching_model(spec.n, spec.degree, rng));
    case EnsembleModel::uniform_regular: return sample_uniform_regular(spec.n, spec.degree, rng);
    case EnsembleModel::erdos_renyi: return sample_erdos_renyi(spec.n, spec.edge_probability, rng);
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------- constructors

Graph grid_graph(std::size_t side) {
  if (side < 1) throw std::invalid_argument("grid side must be >= 1");
  Graph g(side * side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      const auto v = static_cast<Vertex>(r * side + c);
      if (c + 1 < side) g.add_edge(v, v + 1);
      if (r + 1 < side) g.add_edge(v, static_cast<Vertex>(v + side));
    }
  }
  return g;
}

SparsifiedGrid sparsified_grid_layout(std::size_t side) {
  if (side < 2) throw std::invalid_argument("sparsified grid side must be >= 2");
  const Graph base = grid_graph(side);
  const auto base_edges = base.edges();
  const std::size_t per_line = side - 1;
  const std::size_t n = side * side + base_edges.size() * per_line;

  SparsifiedGrid out{Graph(n), side, {}};
  auto next = static_cast<Vertex>(side * side);
  for (const auto& [a, b] : base_edges) {
    SubdividedLine line{a, b, {}};
    Vertex prev = a;
    for (std::size_t k = 0; k < per_line; ++k) {
      out.graph.add_edge(prev, next);
      line.inserted.push_back(next);
      prev = next++;
    }
    out.graph.add_edge(prev, b);
    out.lines.push_back(std::move(line));
  }
  return out;
}

Graph sparsified_grid_graph(std::size_t side) { return sparsified_grid_layout(side).graph; }

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(static_cast<Vertex>(n - 1), 0);
  return g;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Graph out(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.num_vertices()) throw std::invalid_argument("relabel: permutation size mismatch");
  Graph out(g.num_vertices());
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

// ---------------------------------------------------------------- rewrites

Graph local_complement(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) throw std::out_of_range("local_complement: vertex out of range");
  Graph out = g;
  const auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) out.toggle_edge(nb[i], nb[j]);
  return out;
}

MeasurementResult measure_pauli(const Graph& g, Vertex v, PauliBasis basis) {
  const std::size_t n = g.num_vertices();
  if (v >= n) throw std::out_of_range("measure_pauli: vertex out of range");
  const Graph src = basis == PauliBasis::Y ? local_complement(g, v) : g;

  MeasurementResult res{Graph(n - 1), std::vector<std::optional<Vertex>>(n)};
  for (Vertex u = 0; u < n; ++u) {
    if (u == v) continue;
    res.label_map[u] = u < v ? u : u - 1;
  }
  for (const auto& [a, b] : src.edges()) {
    if (a == v || b == v) continue;
    res.graph.add_edge(*res.label_map[a], *res.label_map[b]);
  }
  return res;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.num_vertices()) {}

  bool run() {
    if (b_.num_vertices() != n_ || a_.num_edges() != b_.num_edges()) return false;
    sig_a_ = signatures(a_);
    sig_b_ = signatures(b_);
    {
      auto sa = sig_a_, sb = sig_b_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return false;
    }
    order_ = search_order();
    map_.assign(n_, kUnmapped);
    used_.assign(n_, false);
    return extend(0);
  }

 private:
  static constexpr Vertex kUnmapped = ~Vertex{0};

  // Degree plus the sorted multiset of neighbour degrees.
  static std::vector<std::vector<std::size_t>> signatures(const Graph& g) {
    std::vector<std::vector<std::size_t>> sig(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      sig[v].push_back(g.degree(v));
      std::vector<std::size_t> nd;
      for (Vertex u : g.neighbors(v)) nd.push_back(g.degree(u));
      std::sort(nd.begin(), nd.end());
      sig[v].insert(sig[v].end(), nd.begin(), nd.end());
    }
    return sig;
  }

  // BFS from the highest-degree vertex in each component, so most vertices are
  // placed next to an already-mapped neighbour.
  std::vector<Vertex> search_order() const {
    std::vector<Vertex> order;
    std::vector<bool> seen(n_, false);
    while (order.size() < n_) {
      Vertex start = kUnmapped;
      for (Vertex v = 0; v < n_; ++v)
        if (!seen[v] && (start == kUnmapped || a_.degree(v) > a_.degree(start))) start = v;
      std::vector<Vertex> queue{start};
      seen[start] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        order.push_back(v);
        for (Vertex u : a_.neighbors(v))
          if (!seen[u]) {
            seen[u] = true;
            queue.push_back(u);
          }
      }
    }
    return order;
  }

  bool consistent(Vertex va, Vertex vb) const {
    if (sig_a_[va] != sig_b_[vb]) return false;
    for (std::size_t i = 0; i < n_; ++i) {
      const Vertex mapped = map_[i];
      if (mapped == kUnmapped) continue;
      if (a_.has_edge(va, static_cast<Vertex>(i)) != b_.has_edge(vb, mapped)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex va = order_[depth];
    for (Vertex vb = 0; vb < n_; ++vb) {
      if (used_[vb] || !consistent(va, vb)) continue;
      map_[va] = vb;
      used_[vb] = true;
      if (extend(depth + 1)) return true;
      map_[va] = kUnmapped;
      used_[vb] = false;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> sig_a_, sig_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) { return IsoSearch(a, b).run(); }

SparseGridReduction reduce_sparsified_grid(const Graph& g, std::size_t side) {
  const std::size_t keep = side * side;
  if (g.num_vertices() < keep) throw std::invalid_argument("reduce_sparsified_grid: graph smaller than the grid");
  SparseGridReduction out{g, {}, false};
  while (out.reduced.num_vertices() > keep) {
    const auto v = static_cast<Vertex>(out.reduced.num_vertices() - 1);
    out.reduced = measure_pauli(out.reduced, v, PauliBasis::Y).graph;
    out.y_sequence.push_back(v);
  }
  out.isomorphic_to_grid = are_isomorphic(out.reduced, grid_graph(side));
  return out;
}

}  // namespace rgs
