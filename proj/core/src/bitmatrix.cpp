#include "rgs/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rgs {

BitMatrix::BitMatrix(std::size_t n)
    : n_(n), wpr_((n + kWordBits - 1) / kWordBits), data_(n * ((n + kWordBits - 1) / kWordBits), 0) {}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  Word& w = data_[r * wpr_ + c / kWordBits];
  const Word bit = Word{1} << (c % kWordBits);
  if (value)
    w |= bit;
  else
    w &= ~bit;
}

std::size_t BitMatrix::row_popcount(std::size_t r) const {
  std::size_t total = 0;
  for (Word w : row(r)) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = r + 1; c < n_; ++c)
      if (get(r, c) != get(c, r)) return false;
  return true;
}

bool BitMatrix::has_zero_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i, i)) return false;
  return true;
}

std::size_t rank_gf2_words(std::span<Word> rows) {
  std::size_t rank = 0;
  const std::size_t k = rows.size();
  for (std::size_t i = 0; i < k; ++i) {
    Word pivot_row = rows[i];
    if (pivot_row == 0) continue;
    ++rank;
    const Word low = pivot_row & (~pivot_row + 1);
    for (std::size_t j = i + 1; j < k; ++j)
      if (rows[j] & low) rows[j] ^= pivot_row;
  }
  return rank;
}

std::size_t rank_gf2(const BitMatrix& m) {
  const std::size_t n = m.size();
  if (n <= kWordBits) {
    std::vector<Word> rows(n);
    for (std::size_t r = 0; r < n; ++r) rows[r] = n ? m.row_word(r) : 0;
    return rank_gf2_words(rows);
  }

  BitMatrix work = m;
  const std::size_t wpr = work.words_per_row();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    const std::size_t w = col / kWordBits;
    const Word bit = Word{1} << (col % kWordBits);
    std::size_t pivot = rank;
    while (pivot < n && !(work.row(pivot)[w] & bit)) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank) {
      auto a = work.row(pivot);
      auto b = work.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const auto prow = work.row(rank);
    for (std::size_t r = rank + 1; r < n; ++r) {
      auto target = work.row(r);
      if (!(target[w] & bit)) continue;
      // Words below w are zero in the pivot row.
      for (std::size_t k = w; k < wpr; ++k) target[k] ^= prow[k];
    }
    ++rank;
  }
  return rank;
}

BitMatrix principal_submatrix(const BitMatrix& m, std::span<const std::size_t> subset) {
  std::vector<std::size_t> idx(subset.begin(), subset.end());
  std::sort(idx.begin(), idx.end());
  for (std::size_t v : idx)
    if (v >= m.size()) throw std::out_of_range("principal_submatrix: index out of range");
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw std::invalid_argument("principal_submatrix: repeated index");

  BitMatrix out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (m.get(idx[i], idx[j])) out.set(i, j, true);
  return out;
}

BitMatrix permute(const BitMatrix& m, std::span<const std::size_t> perm) {
  const std::size_t n = m.size();
  if (perm.size() != n) throw std::invalid_argument("permute: permutation size mismatch");
  BitMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (m.get(r, c)) out.set(perm[r], perm[c], true);
  return out;
}

BitMatrix sample_adjacency(std::size_t n, Rng& rng) {
  BitMatrix a(n);
  for (std::size_t r = 0; r < n; ++r) {
    // Draw the strictly-upper part of row r a word at a time.
    for (std::size_t c = r + 1; c < n; c += kWordBits) {
      const Word bits = rng();
      const std::size_t span = std::min(kWordBits, n - c);
      for (std::size_t k = 0; k < span; ++k)
        if ((bits >> k) & 1U) a.set_symmetric(r, c + k, true);
    }
  }
  return a;
}

BitMatrix sample_adjacency(std::size_t n, Seed seed) {
  Rng rng = make_rng(seed);
  return sample_adjacency(n, rng);
}

}  // namespace rgs
