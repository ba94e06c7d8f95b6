#pragma once

// Dense state-vector simulation of small graph states and their X-Y plane
// measurement statistics.

#include <complex>
#include <cstddef>
#include <vector>

#include "rgs/graph.hpp"
#include "rgs/random.hpp"

namespace rgs {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxStateVectorQubits = 14;

/// Measurement angles in [0, 2*pi), one per qubit.
class AngleVector {
 public:
  AngleVector() = default;
  explicit AngleVector(std::vector<double> theta);  // reduced mod 2*pi

  static AngleVector uniform(std::size_t n, Rng& rng);
  static AngleVector zeros(std::size_t n) { return AngleVector(std::vector<double>(n, 0.0)); }

  std::size_t size() const { return theta_.size(); }
  double operator[](std::size_t j) const { return theta_[j]; }
  const std::vector<double>& values() const { return theta_; }

 private:
  std::vector<double> theta_;
};

/// Outcome probabilities over 2^n bitstrings; bit j of the index is qubit j.
struct OutcomeDistribution {
  std::size_t n = 0;
  std::vector<double> probs;
};

/// Amplitudes (-1)^{x^T U x} / sqrt(2^n) of |G>, U the upper triangle of A_G.
std::vector<Complex> graph_state_vector(const Graph& g);

/// p(x) = |<m(x, theta)|G>|^2 with per-qubit basis vector
/// (|0> + (-1)^{x_j} e^{i theta_j} |1>) / sqrt(2). Requires n <= 14.
OutcomeDistribution graph_state_distribution(const Graph& g, const AngleVector& theta);

/// Normalized collision probability 2^n * sum_x p(x)^2.
double m2_of_distribution(const OutcomeDistribution& p);

/// Fraction of outcomes with p(x) >= alpha * 2^-n.
double anticoncentration_fraction(const OutcomeDistribution& p, double alpha);

/// In-place unnormalized Walsh-Hadamard transform; size must be a power of 2.
void walsh_hadamard(std::vector<Complex>& v);

}  // namespace rgs
