#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rgs/random.hpp"

namespace rgs {

/// Monte Carlo summary: sample mean, standard error of the mean, sample count
/// and the master seed that reproduces it.
struct MomentEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  Seed seed = 0;
};

/// Mean and standard error of `values`, summed in index order.
MomentEstimate summarize(std::span<const double> values, Seed seed);

/// Runs body(i) for i in [0, count) on `threads` workers (0 = hardware
/// concurrency) with static contiguous chunks. body must only write to
/// per-index state.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// Evaluates f(i, derive_seed(seed, i)) for every sample index and summarizes.
/// The result is bit-identical for any thread count.
MomentEstimate monte_carlo(std::uint64_t samples, Seed seed, unsigned threads,
                           const std::function<double(std::uint64_t, Seed)>& f);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Pearson chi-square goodness of fit. Adjacent bins whose expected count is
/// below `min_expected` are pooled (in order) before the statistic is formed.
ChiSquareResult chi_square_test(std::span<const double> observed,
                                std::span<const double> expected,
                                double min_expected = 5.0);

double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace rgs
