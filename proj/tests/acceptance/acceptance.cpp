// Acceptance run: one PASS/FAIL line per top-level criterion, each followed by
// indented detail lines. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rgs/entanglement.hpp"
#include "rgs/krawtchouk.hpp"
#include "rgs/moments.hpp"
#include "rgs/subgraphs.hpp"

using namespace rgs;

namespace {

// Tolerances, fixed by the criteria.
constexpr double kFig1LimitBand = 0.25;
constexpr double kMcSigmas = 4.0;
constexpr std::uint64_t kAngleSamples = 100'000;
constexpr std::uint64_t kEnsembleSamples = 100'000;
constexpr std::size_t kTriangleGraphs = 100;
constexpr double kChiSquareMinP = 1e-3;
constexpr std::uint64_t kRankSamples = 100'000;
constexpr double kMarkovTv = 0.02;
constexpr std::uint64_t kMarkovSamples = 100'000;
constexpr double kStationaryResidual = 1e-10;
constexpr double kFiniteLawTolerance = 1e-6;
constexpr double kOverlapSlack = 1e-9;
constexpr std::size_t kEntanglementGraphs = 100;
constexpr double kInducedBandLow = 0.5;
constexpr double kInducedBandHigh = 2.0;
constexpr std::uint64_t kInducedSamples = 1000;
constexpr double kFrequencySigmas = 3.0;
constexpr std::uint64_t kFrequencySamples = 20'000;

constexpr Seed kSeed = 20240611;

int failures = 0;

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}

  void check(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    details_.push_back(std::string(ok ? "ok    " : "FAILED") + " " + what);
  }

  void note(const std::string& what) { details_.push_back("note   " + what); }

  ~Criterion() {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::printf("%s %s (%.1f s)\n", ok_ ? "PASS" : "FAIL", name_.c_str(), secs);
    for (const auto& d : details_) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    if (!ok_) ++failures;
  }

 private:
  std::string name_;
  bool ok_ = true;
  std::vector<std::string> details_;
  std::chrono::steady_clock::time_point start_;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const char* model_name(MomentModel m) { return m == MomentModel::pairing ? "pairing" : "matching"; }

Rational exact_avg(MomentModel m, std::int64_t n, std::int64_t d) {
  return m == MomentModel::pairing ? exact_avg_m2_pairing(n, d) : exact_avg_m2_matching(n, d);
}

bool defined(MomentModel m, std::int64_t n, std::int64_t d) {
  return m == MomentModel::pairing ? (n * d) % 2 == 0 : n % 2 == 0;
}

void fig1_limits() {
  Criterion c("fig1-limits");
  for (const auto model : {MomentModel::pairing, MomentModel::matching}) {
    for (std::int64_t d : {3, 4}) {
      const double limit = d % 2 == 0 ? 3.0 : 2.0;
      double previous_gap = INFINITY;
      std::int64_t previous_n = 0, first_increase = -1;
      double at64 = 0.0, peak_gap = 0.0;
      std::int64_t peak_n = 0;
      for (std::int64_t n = 4; n <= 64; ++n) {
        if (!defined(model, n, d)) continue;
        const double v = to_double(exact_avg(model, n, d));
        const double gap = std::abs(v - limit);
        if (n >= 16) {
          if (gap > previous_gap && first_increase < 0) first_increase = previous_n;
          if (gap > peak_gap) peak_gap = gap, peak_n = n;
          previous_gap = gap;
          previous_n = n;
        }
        if (n == 64) at64 = v;
      }
      c.check(std::abs(at64 - limit) <= kFig1LimitBand,
              fmt("%s d=%lld: value(64) = %.6f, |value - %g| = %.6f <= %.2f", model_name(model),
                  static_cast<long long>(d), at64, limit, std::abs(at64 - limit), kFig1LimitBand));
      c.check(first_increase < 0,
              first_increase < 0
                  ? fmt("%s d=%lld: |value - limit| non-increasing for n >= 16", model_name(model),
                        static_cast<long long>(d))
                  : fmt("%s d=%lld: |value - limit| grows from n=%lld, peaks %.6f at n=%lld", model_name(model),
                        static_cast<long long>(d), static_cast<long long>(first_increase), peak_gap,
                        static_cast<long long>(peak_n)));
    }
  }
}

void oracle_triangle() {
  Criterion c("oracle-triangle-moments");
  c.check(m2_statmech(empty_graph(1)) == Rational(3, 2), "anchor: empty graph n=1 -> 3/2");
  c.check(m2_statmech(complete_graph(2)) == Rational(5, 4), "anchor: single edge -> 5/4");
  c.check(exact_avg_m2_pairing(2, 2) == Rational(9, 4), "anchor: pairing n=2 d=2 -> 9/4");
  c.check(avg_matching_parity(4, 1, 1) == Rational(1, 3), "anchor: matching parity n=4 a=b=1 -> 1/3");
  c.check(avg_matching_parity(6, 2, 2) == Rational(-1, 15), "anchor: matching parity n=6 a=b=2 -> -1/15");

  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{2, 2}, {4, 2}, {4, 3}, {6, 3}};

  // Exact ensemble averages against enumeration of every configuration.
  for (const auto& [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {4, 2}, {4, 3}}) {
    c.check(exact_avg_m2_pairing(n, d) == oracle::pairing_average_m2(n, d),
            fmt("pairing n=%zu d=%zu exact = enumeration over all pairings", n, d));
  }
  for (const auto& [n, d] : shapes)
    c.check(exact_avg_m2_matching(n, d) == oracle::matching_average_m2(n, d),
            fmt("matching n=%zu d=%zu exact = enumeration over all matching tuples", n, d));

  // Per-graph exact value against a state-vector angle Monte Carlo.
  for (const auto model : {EnsembleModel::pairing, EnsembleModel::matching}) {
    std::size_t agree = 0, oracle_agree = 0;
    double worst_z = 0.0;
    for (std::size_t i = 0; i < kTriangleGraphs; ++i) {
      const auto& [n, d] = shapes[i % shapes.size()];
      Rng rng = make_rng(derive_seed(kSeed, static_cast<std::uint64_t>(model), i));
      const Graph g = sample_graph({model, n, d, 0.5, 0}, rng);
      const Rational exact = m2_statmech(g);
      if (exact == oracle::statmech_subset_sum(g)) ++oracle_agree;
      const auto est = mc_angle_m2(g, kAngleSamples, derive_seed(kSeed, 100 + static_cast<std::uint64_t>(model), i));
      const double diff = std::abs(est.mean - to_double(exact));
      const double z = est.std_error > 0 ? diff / est.std_error : (diff <= 1e-12 ? 0.0 : INFINITY);
      worst_z = std::max(worst_z, z);
      if (z <= kMcSigmas) ++agree;
    }
    c.check(oracle_agree == kTriangleGraphs,
            fmt("%s: statmech = subset-sum oracle on %zu/%zu graphs", to_string(model).c_str(), oracle_agree,
                kTriangleGraphs));
    c.check(agree == kTriangleGraphs,
            fmt("%s: statmech within %.0f stderr of angle MC (1e5 draws) on %zu/%zu graphs, worst z = %.2f",
                to_string(model).c_str(), kMcSigmas, agree, kTriangleGraphs, worst_z));
  }

  // Ensemble means of the per-graph exact value against the closed form.
  std::uint64_t index = 0;
  for (const auto model : {EnsembleModel::pairing, EnsembleModel::matching}) {
    for (const auto& [n, d] : shapes) {
      const EnsembleSpec spec{model, n, d, 0.5, derive_seed(kSeed, 1000 + index++)};
      const auto est = mc_avg_m2(spec, kEnsembleSamples, M2Mode::statmech);
      const double exact = to_double(model == EnsembleModel::pairing ? exact_avg_m2_pairing(n, d)
                                                                     : exact_avg_m2_matching(n, d));
      const double diff = std::abs(est.mean - exact);
      // Some tiny ensembles are deterministic after simplification.
      const double z = est.std_error > 0 ? diff / est.std_error : (diff <= 1e-12 ? 0.0 : INFINITY);
      c.check(z <= kMcSigmas, fmt("%s n=%zu d=%zu: MC %.5f +- %.5f vs exact %.5f (z = %.2f)",
                                  to_string(model).c_str(), n, d, est.mean, est.std_error, exact, z));
    }
  }
}

void krawtchouk_identities() {
  Criterion c("krawtchouk");
  bool orth = true;
  for (std::int64_t N = 0; N <= 24 && orth; ++N) {
    std::vector<std::vector<BigInt>> table(N + 1);
    for (std::int64_t t = 0; t <= N; ++t) table[t] = krawtchouk_row(N, t, N);
    for (std::int64_t i = 0; i <= N; ++i)
      for (std::int64_t j = 0; j <= N; ++j) {
        BigInt sum = 0;
        for (std::int64_t t = 0; t <= N; ++t) sum += binomial(N, t) * table[t][i] * table[t][j];
        const BigInt want = i == j ? BigInt(pow2(N) * binomial(N, i)) : BigInt(0);
        if (sum != want) orth = false;
      }
  }
  c.check(orth, "orthogonality sum_t C(N,t) K_i K_j = 2^N C(N,i) delta_ij exactly, N <= 24");

  std::size_t points = 0, orth_viol = 0, derksen_viol = 0, centered_viol = 0;
  for (std::int64_t N = 1; N <= 20; ++N)
    for (std::int64_t i = 0; i <= N; ++i)
      for (std::int64_t t = 0; t <= N; ++t) {
        ++points;
        const double k = std::abs(krawtchouk(i, N, t).get_d());
        if (k > orth_bound(i, N, t) * (1 + 1e-12)) ++orth_viol;
        if (k > derksen_bound(i, N, t) * (1 + 1e-12)) ++derksen_viol;
        if (k > derksen_bound_centered(i, N, t) * (1 + 1e-12)) ++centered_viol;
      }
  c.check(orth_viol == 0, fmt("orthogonality bound holds at %zu/%zu points, N <= 20", points - orth_viol, points));
  c.check(derksen_viol == 0, fmt("Derksen bound with (N-t)^2/N^2 holds at %zu/%zu points, N <= 20",
                                 points - derksen_viol, points));
  c.note(fmt("Derksen bound with (N-2t)^2/N^2 holds at %zu/%zu points", points - centered_viol, points));

  bool recurrence = true;
  for (std::int64_t N = 0; N <= 30; ++N)
    for (std::int64_t x = 0; x <= N; ++x) {
      const auto row = krawtchouk_row(N, x, N);
      for (std::int64_t i = 0; i <= N; ++i) recurrence = recurrence && row[i] == krawtchouk(i, N, x);
    }
  c.check(recurrence, "three-term recurrence = defining sum for all N <= 30");
}

void rank_distribution() {
  Criterion c("rank-distribution");
  for (std::size_t n = 1; n <= 5; ++n)
    c.check(rank_distribution_exact(n).probs == oracle::rank_distribution_by_enumeration(n),
            fmt("n=%zu exact law = enumeration of all matrices", n));
  std::uint64_t index = 0;
  for (std::size_t n : {4, 8, 16}) {
    const auto hist = sample_rank_histogram(n, kRankSamples, derive_seed(kSeed, 2000 + index++));
    const auto probs = rank_probabilities(rank_distribution_exact(n));
    std::vector<double> observed(hist.begin(), hist.end()), expected;
    for (double p : probs) expected.push_back(p * static_cast<double>(kRankSamples));
    const auto chi = chi_square_test(observed, expected);
    c.check(chi.p_value > kChiSquareMinP,
            fmt("n=%zu chi-square %.3f on %d dof, p = %.4f > %g", n, chi.statistic, chi.dof, chi.p_value,
                kChiSquareMinP));
  }
  std::size_t cells = 0, inside = 0;
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto probs = rank_probabilities(rank_distribution_exact(n));
    for (std::size_t h = 0; h < probs.size(); ++h) {
      const auto b = rank_distribution_gaussian_bounds(n, h);
      ++cells;
      if (b.lower <= probs[h] && probs[h] <= b.upper) ++inside;
    }
  }
  c.check(inside == cells, fmt("Gaussian sandwich holds for %zu/%zu (n, h) cells, n <= 30", inside, cells));
}

void markov_chain() {
  Criterion c("markov-chain");
  const auto cmp = markov_evolve_vs_growth(0, 0, 10, kMarkovSamples, derive_seed(kSeed, 3000));
  c.check(cmp.tv <= kMarkovTv, fmt("k=10 chain vs matrix growth TV = %.5f <= %.2f", cmp.tv, kMarkovTv));
  for (const auto parity : {Parity::even, Parity::odd}) {
    const auto pi = stationary_deficiency(parity);
    const auto next = markov_step(markov_step(pi));
    double residual = 0.0;
    for (std::size_t i = 0; i < pi.dist.size(); ++i) residual += std::abs(pi.dist[i] - next.dist[i]);
    c.check(residual <= kStationaryResidual, fmt("%s class: stationary residual %.2e <= %.0e",
                                                 parity == Parity::even ? "even" : "odd", residual,
                                                 kStationaryResidual));
  }
  const std::size_t n = 120;
  const auto probs = rank_probabilities(rank_distribution_exact(n));
  const auto pi = stationary_deficiency(Parity::even);
  double worst = 0.0;
  for (std::size_t h = 0; h < probs.size(); ++h) {
    const std::size_t def = n - 2 * h;
    worst = std::max(worst, std::abs(probs[h] - (def < pi.dist.size() ? pi.dist[def] : 0.0)));
  }
  c.check(worst <= kFiniteLawTolerance,
          fmt("n=120 deficiency law vs stationary law: max diff %.2e <= %.0e", worst, kFiniteLawTolerance));
}

void entanglement_bounds() {
  Criterion c("entanglement-bound-coherence");
  for (std::size_t n : {6, 8, 10}) {
    std::size_t ok = 0, oracle_ok = 0;
    double worst = -INFINITY;
    for (std::size_t i = 0; i < kEntanglementGraphs; ++i) {
      Rng rng = make_rng(derive_seed(kSeed, 4000 + n, i));
      const Graph g = sample_erdos_renyi(n, 0.5, rng);
      const auto dmax = max_rank_deficiency(g, SearchMode::exhaustive);
      if (dmax.deficiency == oracle::max_deficiency_brute(g)) ++oracle_ok;
      const auto als = als_product_overlap(g, 4, AlsInit::real_stabilizer, 1e-12, derive_seed(kSeed, 5000 + n, i));
      const double lhs = -std::log2(als.overlap);
      const double rhs = static_cast<double>(n - dmax.deficiency);
      worst = std::max(worst, lhs - rhs);
      if (lhs <= rhs + kOverlapSlack) ++ok;
    }
    c.check(oracle_ok == kEntanglementGraphs,
            fmt("n=%zu: exhaustive D_max = brute force on %zu/%zu graphs", n, oracle_ok, kEntanglementGraphs));
    c.check(ok == kEntanglementGraphs,
            fmt("n=%zu: -log2(ALS overlap) <= n - D_max + 1e-9 on %zu/%zu graphs (max excess %.2e)", n, ok,
                kEntanglementGraphs, worst));
  }
  const auto bell = als_product_overlap(complete_graph(2), 4, AlsInit::real_stabilizer, 1e-12, kSeed);
  c.check(std::abs(-std::log2(bell.overlap) - 1.0) <= kOverlapSlack,
          fmt("Bell pair: -log2(best product overlap) = %.12f", -std::log2(bell.overlap)));
  bool stars = true, cliques = true;
  for (std::size_t n = 2; n <= 8; ++n) {
    stars = stars && max_rank_deficiency(star_graph(n), SearchMode::exhaustive).deficiency == n - 1 &&
            oracle::max_deficiency_brute(star_graph(n)) == n - 1;
    cliques = cliques && max_rank_deficiency(complete_graph(n), SearchMode::exhaustive).deficiency == 1 &&
              oracle::max_deficiency_brute(complete_graph(n)) == 1;
  }
  c.check(stars, "D_max(star_n) = n - 1 for 2 <= n <= 8");
  c.check(cliques, "D_max(K_n) = 1 for 2 <= n <= 8");
}

void sparsified_grid() {
  Criterion c("sparsified-grid-reduction");
  for (std::size_t L = 2; L <= 5; ++L) {
    const auto red = reduce_sparsified_grid(sparsified_grid_graph(L), L);
    // Measuring from the top label down leaves grid labels untouched, so the
    // result can be compared with grid_graph(L) edge for edge.
    const bool same = red.reduced == grid_graph(L);
    c.check(red.isomorphic_to_grid && same,
            fmt("L=%zu: %zu Y measurements give grid(%zu) (isomorphic %s, identical labels %s)", L,
                red.y_sequence.size(), L, red.isomorphic_to_grid ? "yes" : "no", same ? "yes" : "no"));
  }
}

void subgraph_counts() {
  Criterion c("subgraph-counts");
  const auto c4 = parse_pattern("c4");
  const auto count = count_induced(grid_graph(3), c4);
  c.check(count == 4 && oracle::induced_count_brute(grid_graph(3), cycle_graph(4)) == 4,
          fmt("count_induced(grid(3), C4) = %llu (brute force 4)", static_cast<unsigned long long>(count)));

  const auto est = mc_induced_count(60, 3, c4, kInducedSamples, derive_seed(kSeed, 6000));
  const double expected = expected_induced_count(60, 3, c4);
  const double ratio = est.mean / expected;
  c.check(ratio >= kInducedBandLow && ratio <= kInducedBandHigh,
          fmt("n=60 d=3 C4: MC mean %.4f +- %.4f vs leading-order %.4f, ratio %.3f in [%.1f, %.1f]", est.mean,
              est.std_error, expected, ratio, kInducedBandLow, kInducedBandHigh));
  c.note(fmt("4-cycle Poisson limit (d-1)^4/8 = %.4f, MC/limit = %.3f", 2.0, est.mean / 2.0));

  const std::size_t n = 60, d = 3;
  const auto freq = monte_carlo(kFrequencySamples, derive_seed(kSeed, 6001), 1, [&](std::uint64_t, Seed s) {
    return sample_uniform_regular(n, d, s).has_edge(0, 1) ? 0.0 : 1.0;
  });
  const double p = 1.0 - static_cast<double>(d) / static_cast<double>(n - 1);
  const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(kFrequencySamples));
  c.check(std::abs(freq.mean - p) <= kFrequencySigmas * sigma,
          fmt("n=60 d=3 fixed-pair non-edge frequency %.5f vs 1 - d/(n-1) = %.5f (|diff| = %.2f sigma)", freq.mean,
              p, std::abs(freq.mean - p) / sigma));
  const auto ne = mc_induced_count(n, d, parse_pattern("nonedge"), 100, derive_seed(kSeed, 6002));
  c.check(std::abs(ne.mean / (n * (n - 1) / 2.0) - p) <= 1e-12,
          fmt("non-edge count / C(n,2) = %.12f equals 1 - d/(n-1)", ne.mean / (n * (n - 1) / 2.0)));
}

void simplicity_bounds() {
  Criterion c("simplicity-bounds");
  std::uint64_t index = 0;
  for (const auto model : {EnsembleModel::pairing, EnsembleModel::matching})
    for (std::size_t d : {2, 3})
      for (std::size_t n : {20, 50}) {
        const auto est = monte_carlo(kFrequencySamples, derive_seed(kSeed, 7000 + index++), 1,
                                     [&](std::uint64_t, Seed s) {
                                       Rng rng = make_rng(s);
                                       const Multigraph g = model == EnsembleModel::pairing
                                                                ? sample_pairing(n, d, rng)
                                                                : sample_matching_model(n, d, rng);
                                       return is_simple(g) ? 1.0 : 0.0;
                                     });
        const double bound = model == EnsembleModel::pairing ? std::pow(2.0, -double(d * d)) : std::pow(2.0, -double(d));
        c.check(est.mean + kFrequencySigmas * est.std_error >= bound,
                fmt("%s d=%zu n=%zu: simple fraction %.4f +- %.4f >= %.6f", to_string(model).c_str(), d, n, est.mean,
                    est.std_error, bound));
      }
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  fig1_limits();
  oracle_triangle();
  krawtchouk_identities();
  rank_distribution();
  markov_chain();
  entanglement_bounds();
  sparsified_grid();
  subgraph_counts();
  simplicity_bounds();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 9 criteria failed (%.1f s)\n", failures, secs);
  return failures == 0 ? 0 : 1;
}
