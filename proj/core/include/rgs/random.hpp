#pragma once

// Seeding and small sampling helpers. Every stochastic routine in the library
// takes an explicit 64-bit seed; per-sample streams are derived from
// (master seed, index) so results do not depend on scheduling.

#include <cstdint>
#include <random>
#include <span>

namespace rgs {

using Seed = std::uint64_t;
using Rng = std::mt19937_64;

inline constexpr Seed kDefaultSeed = 0x5eed2025ULL;

std::uint64_t splitmix64(std::uint64_t x);

/// Independent stream seed for item `index` of a run seeded with `master`.
Seed derive_seed(Seed master, std::uint64_t index);
/// Two-level derivation, e.g. (sample, angle draw).
Seed derive_seed(Seed master, std::uint64_t index, std::uint64_t sub);

Rng make_rng(Seed seed);

/// Uniform integer in [0, bound), bias-free and identical across standard
/// libraries (std::uniform_int_distribution is not).
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace rgs
