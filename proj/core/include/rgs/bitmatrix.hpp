#pragma once

// Bit-packed square matrices over GF(2).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rgs/random.hpp"

namespace rgs {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Square n x n matrix over GF(2), one machine-word-packed bit-vector per row.
/// Used mostly as a graph adjacency matrix (symmetric, zero diagonal), but the
/// kernels below do not assume that.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c) { data_[r * wpr_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

  /// Sets or clears both (r,c) and (c,r).
  void set_symmetric(std::size_t r, std::size_t c, bool value) {
    set(r, c, value);
    set(c, r, value);
  }

  std::span<Word> row(std::size_t r) { return {data_.data() + r * wpr_, wpr_}; }
  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * wpr_, wpr_}; }

  /// Row r as a single word; only valid when n <= 64.
  Word row_word(std::size_t r) const { return data_[r * wpr_]; }

  std::size_t row_popcount(std::size_t r) const;

  bool is_symmetric() const;
  bool has_zero_diagonal() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> data_;
};

/// Rank over GF(2) by word-parallel Gaussian elimination on a copy.
std::size_t rank_gf2(const BitMatrix& m);

/// Rank of the k x k matrix given as k row words (k <= 64); destroys `rows`.
std::size_t rank_gf2_words(std::span<Word> rows);

/// Rows and columns indexed by `subset` (taken in ascending order).
BitMatrix principal_submatrix(const BitMatrix& m, std::span<const std::size_t> subset);

/// P m P^T for the permutation i -> perm[i].
BitMatrix permute(const BitMatrix& m, std::span<const std::size_t> perm);

/// Uniformly random symmetric matrix with zero diagonal (i.i.d. fair bits above
/// the diagonal).
BitMatrix sample_adjacency(std::size_t n, Seed seed);
BitMatrix sample_adjacency(std::size_t n, Rng& rng);

}  // namespace rgs
