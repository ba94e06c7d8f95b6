#include "rgs/moments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "rgs/krawtchouk.hpp"

namespace rgs {

namespace {

std::size_t parity_with(Word neighbours, Word set) { return static_cast<std::size_t>(std::popcount(neighbours & set)) & 1U; }

void check_matching_domain(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("matching parity needs n even and non-negative");
  if (a < 0 || b < 0 || a + b > n) throw std::invalid_argument("matching parity needs a, b >= 0 and a + b <= n");
}

struct Canonical {
  int sign = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend auto operator<=>(const Canonical&, const Canonical&) = default;
};

// Uses f(L,R) = f(R,L) and f(L,T) = (-1)^{|L|} f(L,R), T the complement of
// L u R, to move the largest of the three sets into the T slot.
Canonical canonicalize(std::int64_t n, std::int64_t a, std::int64_t b) {
  const std::int64_t c = n - a - b;
  if (c >= a && c >= b) return {1, a, b};
  if (b >= a) return {a % 2 == 0 ? 1 : -1, a, c};
  return {b % 2 == 0 ? 1 : -1, b, c};
}

// sum_{i = a mod 2} K_i^{n-a}(b) a!/(a-i)!! (n-a-i-1)!!, valid once the
// complement is at least as large as both sets.
BigInt canonical_parity_numerator(std::int64_t n, std::int64_t a, std::int64_t b) {
  if (a > n - a - b || b > n - a - b) throw std::logic_error("matching parity called outside its canonical domain");
  const std::vector<BigInt> kraw = krawtchouk_row(n - a, b, a);
  const std::int64_t i0 = a % 2;
  BigInt falling = factorial(a);
  mpz_divexact(falling.get_mpz_t(), falling.get_mpz_t(), double_factorial(a - i0).get_mpz_t());
  if (n - a - i0 - 1 < -1) throw std::logic_error("double factorial argument below -1");
  BigInt tail = double_factorial(n - a - i0 - 1);
  BigInt sum = 0;
  for (std::int64_t i = i0; i <= a; i += 2) {
    sum += kraw[static_cast<std::size_t>(i)] * falling * tail;
    if (i + 2 > a) break;
    falling *= (a - i);
    mpz_divexact_ui(tail.get_mpz_t(), tail.get_mpz_t(), static_cast<unsigned long>(n - a - i - 1));
  }
  return sum;
}

BigInt canonical_numerator(std::int64_t n, const Canonical& c) {
  BigInt v = canonical_parity_numerator(n, c.a, c.b);
  if (c.sign < 0) v = -v;
  return v;
}

void check_exact_domain(MomentModel model, std::int64_t n, std::int64_t d) {
  if (n < 1 || n > static_cast<std::int64_t>(kMaxExactVertices))
    throw std::invalid_argument("exact moments need 1 <= n <= " + std::to_string(kMaxExactVertices));
  if (d < 1 || d > static_cast<std::int64_t>(kMaxExactDegree))
    throw std::invalid_argument("exact moments need 1 <= d <= " + std::to_string(kMaxExactDegree));
  if (model == MomentModel::pairing && (n * d) % 2 != 0) throw std::invalid_argument("pairing model needs n*d even");
  if (model == MomentModel::matching && n % 2 != 0) throw std::invalid_argument("matching model needs n even");
}

// Exact inner numerators N(k, l) for every k + l <= n, over the common
// denominator `den`: inner(k, l) = N(k, l) / den.
struct InnerTable {
  std::vector<std::vector<BigInt>> numer;
  BigInt den;
};

InnerTable inner_table(MomentModel model, std::int64_t n, std::int64_t d, unsigned threads) {
  check_exact_domain(model, n, d);
  const std::int64_t points = model == MomentModel::pairing ? n * d : n;
  const std::int64_t scale = model == MomentModel::pairing ? d : 1;

  std::map<Canonical, std::size_t> index;
  std::vector<Canonical> keys;
  for (std::int64_t k = 0; k <= n; ++k) {
    for (std::int64_t l = 0; k + l <= n; ++l) {
      const Canonical c = canonicalize(points, k * scale, l * scale);
      const Canonical unsigned_key{1, c.a, c.b};
      if (index.emplace(unsigned_key, keys.size()).second) keys.push_back(unsigned_key);
    }
  }
  std::vector<BigInt> values(keys.size());
  parallel_for(keys.size(), threads, [&](std::size_t i) {
    BigInt v = canonical_parity_numerator(points, keys[i].a, keys[i].b);
    if (model == MomentModel::matching) mpz_pow_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(d));
    values[i] = std::move(v);
  });

  InnerTable t;
  t.den = double_factorial(points - 1);
  if (model == MomentModel::matching) mpz_pow_ui(t.den.get_mpz_t(), t.den.get_mpz_t(), static_cast<unsigned long>(d));
  t.numer.resize(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k) {
    auto& row = t.numer[static_cast<std::size_t>(k)];
    row.resize(static_cast<std::size_t>(n - k + 1));
    for (std::int64_t l = 0; k + l <= n; ++l) {
      const Canonical c = canonicalize(points, k * scale, l * scale);
      BigInt v = values[index.at(Canonical{1, c.a, c.b})];
      // an odd power keeps the sign; an even power of the matching factor loses it
      const bool negate = c.sign < 0 && (model == MomentModel::pairing || d % 2 == 1);
      if (negate) v = -v;
      row[static_cast<std::size_t>(l)] = std::move(v);
    }
  }
  return t;
}

Rational exact_average(MomentModel model, std::int64_t n, std::int64_t d, unsigned threads) {
  const InnerTable t = inner_table(model, n, d, threads);
  BigInt sum = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    const BigInt ck = binomial(n, k);
    for (std::int64_t l = 0; k + l <= n; ++l)
      sum += ck * binomial(n - k, l) * t.numer[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
  }
  return make_rational(sum, t.den * pow2(static_cast<std::uint64_t>(n)));
}

}  // namespace

std::int64_t statmech_sum(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxStatmechVertices)
    throw std::invalid_argument("statmech enumeration is limited to " + std::to_string(kMaxStatmechVertices) + " vertices");
  const BitMatrix& adj = g.adjacency();
  std::vector<Word> nb(n);
  for (std::size_t v = 0; v < n; ++v) nb[v] = adj.row_word(v);

  // Loopless reflected ternary Gray code (0 = outside, 1 = L, 2 = R); each step
  // moves one vertex between adjacent states and updates the crossing parity.
  std::vector<int> digit(n, 0), dir(n, 1);
  std::vector<std::size_t> focus(n + 1);
  for (std::size_t j = 0; j <= n; ++j) focus[j] = j;
  Word left = 0, right = 0;
  std::size_t parity = 0;
  std::int64_t sum = 0;
  for (;;) {
    sum += parity ? -1 : 1;
    const std::size_t j = focus[0];
    focus[0] = 0;
    if (j == n) break;
    const Word bit = Word{1} << j;
    const int from = digit[j];
    digit[j] += dir[j];
    const int to = digit[j];
    if (from == 1 || to == 1) parity ^= parity_with(nb[j], right);
    if (from == 2 || to == 2) parity ^= parity_with(nb[j], left);
    if (from == 1) left ^= bit;
    if (from == 2) right ^= bit;
    if (to == 1) left ^= bit;
    if (to == 2) right ^= bit;
    if (digit[j] == 0 || digit[j] == 2) {
      dir[j] = -dir[j];
      focus[j] = focus[j + 1];
      focus[j + 1] = j + 1;
    }
  }
  return sum;
}

Rational m2_statmech(const Graph& g) {
  return make_rational(BigInt(static_cast<long>(statmech_sum(g))), pow2(g.num_vertices()));
}

BigInt matching_parity_numerator(std::int64_t n, std::int64_t a, std::int64_t b) {
  check_matching_domain(n, a, b);
  return canonical_numerator(n, canonicalize(n, a, b));
}

Rational avg_matching_parity(std::int64_t n, std::int64_t a, std::int64_t b) {
  return make_rational(matching_parity_numerator(n, a, b), double_factorial(n - 1));
}

Rational pairing_inner_average(std::int64_t n, std::int64_t k, std::int64_t l, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("pairing model needs d >= 1");
  return avg_matching_parity(n * d, k * d, l * d);
}

Rational matching_inner_average(std::int64_t n, std::int64_t k, std::int64_t l, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("matching model needs d >= 1");
  Rational f = avg_matching_parity(n, k, l);
  Rational out = 1;
  for (std::int64_t i = 0; i < d; ++i) out *= f;
  return out;
}

std::vector<std::vector<Rational>> m2_term_table(MomentModel model, std::int64_t n, std::int64_t d, unsigned threads) {
  const InnerTable t = inner_table(model, n, d, threads);
  const BigInt den = t.den * pow2(static_cast<std::uint64_t>(n));
  std::vector<std::vector<Rational>> table(static_cast<std::size_t>(n + 1),
                                           std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(0)));
  for (std::int64_t k = 0; k <= n; ++k)
    for (std::int64_t l = 0; k + l <= n; ++l)
      table[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = make_rational(
          binomial(n, k) * binomial(n - k, l) * t.numer[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)], den);
  return table;
}

Rational exact_avg_m2_pairing(std::int64_t n, std::int64_t d, unsigned threads) {
  return exact_average(MomentModel::pairing, n, d, threads);
}

Rational exact_avg_m2_matching(std::int64_t n, std::int64_t d, unsigned threads) {
  return exact_average(MomentModel::matching, n, d, threads);
}

double approx_avg_m2(MomentModel model, std::int64_t n, std::int64_t d, unsigned threads) {
  const InnerTable t = inner_table(model, n, d, threads);
  long double sum = 0.0L;
  for (std::int64_t k = 0; k <= n; ++k) {
    for (std::int64_t l = 0; k + l <= n; ++l) {
      const double inner = Rational(t.numer[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)], t.den).get_d();
      const double weight = std::ldexp(BigInt(binomial(n, k) * binomial(n - k, l)).get_d(), -static_cast<int>(n));
      sum += static_cast<long double>(weight) * static_cast<long double>(inner);
    }
  }
  return static_cast<double>(sum);
}

MomentEstimate mc_angle_m2(const Graph& g, std::uint64_t angle_samples, Seed seed, unsigned threads) {
  if (g.num_vertices() > kMaxStateVectorQubits)
    throw std::invalid_argument("state vector simulation is limited to " + std::to_string(kMaxStateVectorQubits) + " qubits");
  return monte_carlo(angle_samples, seed, threads, [&](std::uint64_t, Seed s) {
    Rng rng = make_rng(s);
    return m2_of_distribution(graph_state_distribution(g, AngleVector::uniform(g.num_vertices(), rng)));
  });
}

MomentEstimate mc_avg_m2(const EnsembleSpec& spec, std::uint64_t samples, M2Mode mode, std::uint64_t angle_samples,
                         unsigned threads) {
  spec.validate();
  if (mode == M2Mode::statmech && spec.n > kMaxStatmechVertices)
    throw std::invalid_argument("statmech mode is limited to " + std::to_string(kMaxStatmechVertices) + " vertices");
  if (mode == M2Mode::statevector && spec.n > kMaxStateVectorQubits)
    throw std::invalid_argument("statevector mode is limited to " + std::to_string(kMaxStateVectorQubits) + " qubits");
  if (mode == M2Mode::statevector && angle_samples == 0)
    throw std::invalid_argument("statevector mode needs at least one angle sample");

  return monte_carlo(samples, spec.seed, threads, [&](std::uint64_t, Seed s) {
    Rng rng = make_rng(s);
    const Graph g = sample_graph(spec, rng);
    if (mode == M2Mode::statmech) return to_double(m2_statmech(g));
    double acc = 0.0;
    for (std::uint64_t a = 0; a < angle_samples; ++a)
      acc += m2_of_distribution(graph_state_distribution(g, AngleVector::uniform(g.num_vertices(), rng)));
    return acc / static_cast<double>(angle_samples);
  });
}

}  // namespace rgs
