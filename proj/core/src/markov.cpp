#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rgs/bitmatrix.hpp"
#include "rgs/entanglement.hpp"
#include "rgs/stats.hpp"

namespace rgs {

double RankDeficiencyChain::total() const {
  double sum = 0.0;
  for (double p : dist) sum += p;
  return sum;
}

RankDeficiencyChain point_mass(std::size_t state, std::size_t cap) {
  if (state > cap) throw std::invalid_argument("point_mass: state above the cap");
  RankDeficiencyChain chain;
  chain.dist.assign(cap + 1, 0.0);
  chain.dist[state] = 1.0;
  chain.parity = state % 2 == 0 ? Parity::even : Parity::odd;
  return chain;
}

RankDeficiencyChain markov_step(const RankDeficiencyChain& chain) {
  RankDeficiencyChain next;
  next.dist.assign(chain.dist.size(), 0.0);
  next.leak = chain.leak;
  next.parity = chain.parity == Parity::even ? Parity::odd : Parity::even;
  const std::size_t cap = chain.cap();
  for (std::size_t i = 0; i < chain.dist.size(); ++i) {
    const double p = chain.dist[i];
    if (p == 0.0) continue;
    const double up = std::ldexp(1.0, -static_cast<int>(i));
    if (i + 1 <= cap)
      next.dist[i + 1] += p * up;
    else
      next.leak += p * up;
    if (i > 0) next.dist[i - 1] += p * (1.0 - up);
  }
  return next;
}

RankDeficiencyChain stationary_deficiency(Parity parity, std::size_t cap) {
  if (cap < 8) throw std::invalid_argument("stationary_deficiency needs a cap of at least 8");
  // pi(i) ~ 2^{-i(i-1)/2} prod_{m > i} (1 - 2^-m); factors beyond m = 64 are
  // within 2^-64 of 1 and are dropped.
  constexpr int kProductLimit = 64;
  RankDeficiencyChain chain;
  chain.dist.assign(cap + 1, 0.0);
  chain.parity = parity;
  const std::size_t first = parity == Parity::even ? 0 : 1;
  double total = 0.0;
  for (std::size_t i = first; i <= cap; i += 2) {
    double product = 1.0;
    for (int m = static_cast<int>(i) + 1; m <= kProductLimit; ++m) product *= 1.0 - std::ldexp(1.0, -m);
    const double x = static_cast<double>(i);
    chain.dist[i] = std::exp2(-x * (x - 1.0) / 2.0) * product;
    total += chain.dist[i];
  }
  for (double& p : chain.dist) p /= total;
  return chain;
}

GrowthComparison markov_evolve_vs_growth(std::size_t r0, std::size_t m0, std::size_t k, std::uint64_t samples,
                                         Seed seed, unsigned threads) {
  const std::size_t m = m0 + k;
  if (m > kWordBits) throw std::invalid_argument("matrix growth needs m0 + k <= 64");
  if (r0 > m0 || r0 % 2 != 0) throw std::invalid_argument("seed rank must be even and at most m0");
  if (samples < 1000) throw std::invalid_argument("matrix growth needs at least 1000 samples");

  GrowthComparison out;
  RankDeficiencyChain chain = point_mass(m0 - r0, std::max(kDefaultDeficiencyCap, m));
  for (std::size_t step = 0; step < k; ++step) chain = markov_step(chain);
  out.chain.assign(chain.dist.begin(), chain.dist.begin() + static_cast<std::ptrdiff_t>(m + 1));

  // Seed matrix: r0/2 hyperbolic blocks [[0,1],[1,0]] followed by zeros.
  std::vector<Word> seed_rows(m0, 0);
  for (std::size_t b = 0; 2 * b + 1 < r0; ++b) {
    seed_rows[2 * b] |= Word{1} << (2 * b + 1);
    seed_rows[2 * b + 1] |= Word{1} << (2 * b);
  }

  std::vector<std::size_t> deficiency(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    Rng rng = make_rng(derive_seed(seed, i));
    std::vector<Word> rows(m, 0);
    std::copy(seed_rows.begin(), seed_rows.end(), rows.begin());
    for (std::size_t r = m0; r < m; ++r) {
      const Word below = r == 0 ? 0 : (rng() & ((Word{1} << r) - 1));
      rows[r] = below;
      for (std::size_t c = 0; c < r; ++c)
        if ((below >> c) & 1U) rows[c] |= Word{1} << r;
    }
    deficiency[i] = m - rank_gf2_words(rows);
  });
  out.empirical.assign(m + 1, 0.0);
  for (std::size_t d : deficiency) out.empirical[d] += 1.0;
  for (double& p : out.empirical) p /= static_cast<double>(samples);
  out.tv = total_variation(out.chain, out.empirical);
  return out;
}

}  // namespace rgs
