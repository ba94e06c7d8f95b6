#include "rgs/statevector.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rgs {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxStateVectorQubits)
    throw std::invalid_argument("state vector simulation is limited to " +
                                std::to_string(kMaxStateVectorQubits) + " qubits");
}

// Parity of z^T U z for the upper triangle U of the adjacency matrix.
bool edge_parity(const Graph& g, std::uint64_t z) {
  const auto& a = g.adjacency();
  unsigned count = 0;
  for (std::uint64_t rest = z; rest != 0; rest &= rest - 1) {
    const auto u = static_cast<std::size_t>(std::countr_zero(rest));
    count += static_cast<unsigned>(std::popcount(a.row_word(u) & z));
  }
  return (count / 2) % 2 == 1;
}

}  // namespace

AngleVector::AngleVector(std::vector<double> theta) : theta_(std::move(theta)) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (double& t : theta_) {
    t = std::fmod(t, two_pi);
    if (t < 0.0) t += two_pi;
    if (t >= two_pi) t = 0.0;
  }
}

AngleVector AngleVector::uniform(std::size_t n, Rng& rng) {
  std::vector<double> theta(n);
  for (double& t : theta) t = 2.0 * std::numbers::pi * uniform_unit(rng);
  return AngleVector(std::move(theta));
}

void walsh_hadamard(std::vector<Complex>& v) {
  const std::size_t size = v.size();
  if (!std::has_single_bit(size)) throw std::invalid_argument("walsh_hadamard: size must be a power of two");
  for (std::size_t half = 1; half < size; half *= 2) {
    for (std::size_t base = 0; base < size; base += 2 * half) {
      for (std::size_t i = base; i < base + half; ++i) {
        const Complex a = v[i];
        const Complex b = v[i + half];
        v[i] = a + b;
        v[i + half] = a - b;
      }
    }
  }
}

std::vector<Complex> graph_state_vector(const Graph& g) {
  const std::size_t n = g.num_vertices();
  check_size(n);
  const std::size_t dim = std::size_t{1} << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<Complex> psi(dim);
  for (std::uint64_t z = 0; z < dim; ++z) psi[z] = edge_parity(g, z) ? -amp : amp;
  return psi;
}

OutcomeDistribution graph_state_distribution(const Graph& g, const AngleVector& theta) {
  const std::size_t n = g.num_vertices();
  check_size(n);
  if (theta.size() != n) throw std::invalid_argument("graph_state_distribution: need one angle per qubit");
  const std::size_t dim = std::size_t{1} << n;

  // <m(x)|G> = 2^-n sum_z (-1)^{z^T U z + x.z} e^{-i theta.z}
  std::vector<Complex> phase(n);
  for (std::size_t j = 0; j < n; ++j) phase[j] = std::polar(1.0, -theta[j]);
  std::vector<Complex> v(dim);
  v[0] = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t z = 0; z < bit; ++z) v[z | bit] = v[z] * phase[j];
  }
  for (std::uint64_t z = 0; z < dim; ++z)
    if (edge_parity(g, z)) v[z] = -v[z];
  walsh_hadamard(v);

  OutcomeDistribution out;
  out.n = n;
  out.probs.resize(dim);
  const double scale = 1.0 / static_cast<double>(dim);
  for (std::size_t x = 0; x < dim; ++x) out.probs[x] = std::norm(v[x] * scale);
  return out;
}

double m2_of_distribution(const OutcomeDistribution& p) {
  double sum = 0.0;
  for (double q : p.probs) sum += q * q;
  return std::ldexp(sum, static_cast<int>(p.n));
}

double anticoncentration_fraction(const OutcomeDistribution& p, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("anticoncentration_fraction: alpha must be positive");
  if (p.probs.empty()) return 0.0;
  const double threshold = std::ldexp(alpha, -static_cast<int>(p.n));
  std::size_t count = 0;
  for (double q : p.probs)
    if (q >= threshold) ++count;
  return static_cast<double>(count) / static_cast<double>(p.probs.size());
}

}  // namespace rgs
