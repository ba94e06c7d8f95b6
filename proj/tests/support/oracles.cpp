#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracle {

namespace {

void matchings_rec(std::vector<std::size_t>& partner, std::vector<bool>& used,
                   const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::size_t first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) {
    visit(partner);
    return;
  }
  used[first] = true;
  for (std::size_t j = first + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    partner[first] = j;
    partner[j] = first;
    matchings_rec(partner, used, visit);
    used[j] = false;
  }
  used[first] = false;
}

std::vector<std::vector<int>> adjacency_of(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

}  // namespace

void for_each_perfect_matching(std::size_t m, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> partner(m, 0);
  std::vector<bool> used(m, false);
  matchings_rec(partner, used, visit);
}

Rational matching_parity(std::size_t n, std::size_t a, std::size_t b) {
  long total = 0, count = 0;
  for_each_perfect_matching(n, [&](const std::vector<std::size_t>& p) {
    int crossings = 0;
    for (std::size_t i = 0; i < a; ++i)
      if (p[i] >= a && p[i] < a + b) ++crossings;
    total += crossings % 2 == 0 ? 1 : -1;
    ++count;
  });
  Rational r(total, count);
  r.canonicalize();
  return r;
}

Rational statmech_base3(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const auto a = adjacency_of(g);
  std::size_t states = 1;
  for (std::size_t i = 0; i < n; ++i) states *= 3;
  long sum = 0;
  std::vector<int> label(n);
  for (std::size_t s = 0; s < states; ++s) {
    std::size_t rest = s;
    for (std::size_t i = 0; i < n; ++i) {
      label[i] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    int crossing = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (label[i] == 1 && label[j] == 2 && a[i][j]) ++crossing;
    sum += crossing % 2 == 0 ? 1 : -1;
  }
  Rational r(BigInt(sum), rgs::pow2(n));
  r.canonicalize();
  return r;
}

Rational statmech_subset_sum(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const auto a = adjacency_of(g);
  Rational sum = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if ((mask >> v) & 1U) continue;
      int inside = 0;
      for (std::size_t u = 0; u < n; ++u)
        if (((mask >> u) & 1U) && a[v][u]) ++inside;
      ok = inside % 2 == 0;
    }
    if (ok) sum += Rational(1, rgs::pow2(static_cast<std::uint64_t>(__builtin_popcountll(mask))));
  }
  return sum;
}

std::vector<std::complex<double>> graph_state_by_cz(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::complex<double>> psi(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  for (const auto& [u, v] : g.edges())
    for (std::size_t x = 0; x < dim; ++x)
      if (((x >> u) & 1U) && ((x >> v) & 1U)) psi[x] = -psi[x];
  return psi;
}

std::vector<double> dense_distribution(const Graph& g, const std::vector<double>& theta) {
  const std::size_t n = g.num_vertices();
  const std::size_t dim = std::size_t{1} << n;
  const auto psi = graph_state_by_cz(g);
  std::vector<double> p(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    // <m(x)| = tensor_j (<0| + (-1)^{x_j} e^{-i theta_j} <1|) / sqrt 2
    std::complex<double> amp = 0.0;
    for (std::size_t z = 0; z < dim; ++z) {
      std::complex<double> coeff = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        coeff /= std::sqrt(2.0);
        if ((z >> j) & 1U) coeff *= (((x >> j) & 1U) ? -1.0 : 1.0) * std::exp(std::complex<double>(0.0, -theta[j]));
      }
      amp += coeff * psi[z];
    }
    p[x] = std::norm(amp);
  }
  return p;
}

Rational pairing_average_m2(std::size_t n, std::size_t d) {
  Rational total = 0;
  long count = 0;
  for_each_perfect_matching(n * d, [&](const std::vector<std::size_t>& p) {
    Graph g(n);
    for (std::size_t h = 0; h < p.size(); ++h)
      if (h < p[h] && h / d != p[h] / d)
        g.toggle_edge(static_cast<rgs::Vertex>(h / d), static_cast<rgs::Vertex>(p[h] / d));
    total += statmech_base3(g);
    ++count;
  });
  return total / Rational(count);
}

Rational matching_average_m2(std::size_t n, std::size_t d) {
  std::vector<std::vector<std::size_t>> all;
  for_each_perfect_matching(n, [&](const std::vector<std::size_t>& p) { all.push_back(p); });
  Rational total = 0;
  long count = 0;
  std::vector<std::size_t> pick(d, 0);
  for (;;) {
    Graph g(n);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t i = 0; i < n; ++i)
        if (i < all[pick[r]][i]) g.toggle_edge(static_cast<rgs::Vertex>(i), static_cast<rgs::Vertex>(all[pick[r]][i]));
    total += statmech_base3(g);
    ++count;
    std::size_t r = 0;
    while (r < d && ++pick[r] == all.size()) pick[r++] = 0;
    if (r == d) break;
  }
  return total / Rational(count);
}

std::size_t dense_rank(std::vector<std::vector<int>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

std::vector<Rational> rank_distribution_by_enumeration(std::size_t n) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<long> counts(n / 2 + 1, 0);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit)
        if ((code >> bit) & 1U) m[i][j] = m[j][i] = 1;
    ++counts[dense_rank(m) / 2];
  }
  std::vector<Rational> out;
  for (long c : counts) {
    Rational r(BigInt(c), rgs::pow2(pairs));
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

std::size_t max_deficiency_brute(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const auto a = adjacency_of(g);
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1U) idx.push_back(v);
    std::vector<std::vector<int>> sub(idx.size(), std::vector<int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = a[idx[i]][idx[j]];
    best = std::max(best, idx.size() - dense_rank(sub));
  }
  return best;
}

std::vector<std::uint64_t> labelled_regular_graphs(std::size_t n, std::size_t d) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<std::uint64_t> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    std::vector<std::size_t> deg(n, 0);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++bit)
        if ((code >> bit) & 1U) ++deg[i], ++deg[j];
    if (std::all_of(deg.begin(), deg.end(), [&](std::size_t x) { return x == d; })) out.push_back(code);
  }
  return out;
}

std::uint64_t pair_code(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::uint64_t code = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (g.has_edge(static_cast<rgs::Vertex>(i), static_cast<rgs::Vertex>(j))) code |= std::uint64_t{1} << bit;
  return code;
}

std::uint64_t induced_count_brute(const Graph& g, const Graph& h) {
  const std::size_t n = g.num_vertices();
  const std::size_t v = h.num_vertices();
  const auto ag = adjacency_of(g);
  const auto ah = adjacency_of(h);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != v) continue;
    std::vector<std::size_t> idx;
    for (std::size_t u = 0; u < n; ++u)
      if ((mask >> u) & 1U) idx.push_back(u);
    std::vector<std::size_t> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    bool found = false;
    do {
      bool same = true;
      for (std::size_t i = 0; i < v && same; ++i)
        for (std::size_t j = 0; j < v && same; ++j) same = ag[idx[i]][idx[j]] == ah[perm[i]][perm[j]];
      found = same;
    } while (!found && std::next_permutation(perm.begin(), perm.end()));
    if (found) ++count;
  }
  return count;
}

std::uint64_t automorphisms_brute(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const auto a = adjacency_of(g);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i)
      for (std::size_t j = 0; j < n && same; ++j) same = a[i][j] == a[perm[i]][perm[j]];
    if (same) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace oracle
