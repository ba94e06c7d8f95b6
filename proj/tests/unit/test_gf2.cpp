#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "rgs/bitmatrix.hpp"
#include "rgs/graph.hpp"

using namespace rgs;

namespace {

std::vector<std::vector<int>> dense(const BitMatrix& m) {
  std::vector<std::vector<int>> out(m.size(), std::vector<int>(m.size(), 0));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out[r][c] = m.get(r, c) ? 1 : 0;
  return out;
}

BitMatrix random_matrix(std::size_t n, Rng& rng) {
  BitMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng() & 1U);
  return m;
}

}  // namespace

TEST(RankGf2, Examples) {
  for (std::size_t n : {0, 1, 5, 64, 65, 130}) EXPECT_EQ(rank_gf2(BitMatrix(n)), 0U);
  EXPECT_EQ(rank_gf2(complete_graph(2).adjacency()), 2U);
  EXPECT_EQ(rank_gf2(complete_graph(3).adjacency()), 2U);
}

TEST(RankGf2, MatchesDenseEliminationOnGeneralMatrices) {
  Rng rng = make_rng(1);
  for (std::size_t n : {1, 2, 7, 31, 64, 65, 100}) {
    for (int rep = 0; rep < 5; ++rep) {
      const BitMatrix m = random_matrix(n, rng);
      const BitMatrix copy = m;
      EXPECT_EQ(rank_gf2(m), oracle::dense_rank(dense(m))) << n;
      EXPECT_EQ(m, copy);
    }
  }
}

TEST(RankGf2, LowRankProducts) {
  // Sum of r random outer products has rank at most r.
  Rng rng = make_rng(2);
  for (std::size_t n : {20, 70}) {
    BitMatrix m(n);
    for (int k = 0; k < 5; ++k) {
      std::vector<int> u(n), v(n);
      for (auto& x : u) x = rng() & 1U;
      for (auto& x : v) x = rng() & 1U;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (u[r] && v[c]) m.flip(r, c);
    }
    EXPECT_LE(rank_gf2(m), 5U);
    EXPECT_EQ(rank_gf2(m), oracle::dense_rank(dense(m)));
  }
}

TEST(RankGf2, SymmetricZeroDiagonalRankIsEven) {
  Rng rng = make_rng(3);
  for (int rep = 0; rep < 10000; ++rep) {
    const std::size_t n = 1 + uniform_below(rng, 64);
    EXPECT_EQ(rank_gf2(sample_adjacency(n, rng)) % 2, 0U);
  }
}

TEST(RankGf2, PermutationInvariant) {
  Rng rng = make_rng(4);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + uniform_below(rng, 90);
    const BitMatrix m = sample_adjacency(n, rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(std::span<std::size_t>(perm), rng);
    EXPECT_EQ(rank_gf2(m), rank_gf2(permute(m, perm)));
  }
}

TEST(PrincipalSubmatrix, Examples) {
  const BitMatrix tri = complete_graph(3).adjacency();
  const std::vector<std::size_t> all{0, 1, 2};
  EXPECT_EQ(principal_submatrix(tri, all), tri);
  const std::vector<std::size_t> one{1};
  EXPECT_EQ(principal_submatrix(tri, one), BitMatrix(1));
  const std::vector<std::size_t> two{1, 0};
  EXPECT_EQ(principal_submatrix(tri, two), complete_graph(2).adjacency());
  const std::vector<std::size_t> bad{0, 0};
  EXPECT_THROW(principal_submatrix(tri, bad), std::invalid_argument);
}

TEST(PrincipalSubmatrix, RankMonotoneUnderInclusion) {
  Rng rng = make_rng(5);
  for (int rep = 0; rep < 500; ++rep) {
    const std::size_t n = 2 + uniform_below(rng, 30);
    const BitMatrix m = sample_adjacency(n, rng);
    std::vector<std::size_t> big, small;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() & 1U) {
        big.push_back(i);
        if (rng() & 1U) small.push_back(i);
      }
    }
    EXPECT_LE(rank_gf2(principal_submatrix(m, small)), rank_gf2(principal_submatrix(m, big)));
  }
}

TEST(SampleAdjacency, StructureAndSmallCases) {
  EXPECT_EQ(sample_adjacency(1, 9), BitMatrix(1));
  for (Seed s = 0; s < 100; ++s) {
    const BitMatrix m = sample_adjacency(70, s);
    EXPECT_TRUE(m.is_symmetric());
    EXPECT_TRUE(m.has_zero_diagonal());
  }
  const int samples = 100000;
  int rank0_n2 = 0, rank0_n3 = 0;
  for (int i = 0; i < samples; ++i) {
    if (rank_gf2(sample_adjacency(2, derive_seed(6, i))) == 0) ++rank0_n2;
    if (rank_gf2(sample_adjacency(3, derive_seed(7, i))) == 0) ++rank0_n3;
  }
  EXPECT_NEAR(rank0_n2 / double(samples), 0.5, 3 * std::sqrt(0.25 / samples));
  EXPECT_NEAR(rank0_n3 / double(samples), 0.125, 3 * std::sqrt(0.125 * 0.875 / samples));
}
