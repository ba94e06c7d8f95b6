#include <benchmark/benchmark.h>

#include "rgs/entanglement.hpp"
#include "rgs/krawtchouk.hpp"
#include "rgs/moments.hpp"
#include "rgs/subgraphs.hpp"

using namespace rgs;

namespace {

Graph random_graph(std::size_t n, Seed seed) { return sample_erdos_renyi(n, 0.5, seed); }

void BM_RankGf2(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_graph(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_gf2(g.adjacency()));
}
BENCHMARK(BM_RankGf2)->Arg(64)->Arg(256)->Arg(1024);

void BM_StatmechSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = sample_uniform_regular(n, 3, Seed{2});
  for (auto _ : state) benchmark::DoNotOptimize(statmech_sum(g));
}
BENCHMARK(BM_StatmechSum)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ExactAverage(benchmark::State& state) {
  const auto model = state.range(0) == 0 ? MomentModel::pairing : MomentModel::matching;
  const auto n = state.range(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(model == MomentModel::pairing ? exact_avg_m2_pairing(n, 4) : exact_avg_m2_matching(n, 4));
}
BENCHMARK(BM_ExactAverage)->Args({0, 32})->Args({0, 64})->Args({1, 32})->Args({1, 64})->Unit(benchmark::kMillisecond);

void BM_Krawtchouk(benchmark::State& state) {
  const auto N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(krawtchouk_row(N, N / 3, N));
}
BENCHMARK(BM_Krawtchouk)->Arg(64)->Arg(512);

void BM_MaxDeficiencyExhaustive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_graph(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(max_rank_deficiency(g, SearchMode::exhaustive).deficiency);
}
BENCHMARK(BM_MaxDeficiencyExhaustive)->Arg(12)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_MaxDeficiencyHeuristic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_graph(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(max_rank_deficiency(g, SearchMode::heuristic, 0, 5).deficiency);
}
BENCHMARK(BM_MaxDeficiencyHeuristic)->Arg(22)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_RankDistribution(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_distribution_exact(n));
}
BENCHMARK(BM_RankDistribution)->Arg(30)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_CountInducedC4(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = sample_uniform_regular(n, 3, Seed{6});
  const auto c4 = parse_pattern("c4");
  for (auto _ : state) benchmark::DoNotOptimize(count_induced(g, c4));
}
BENCHMARK(BM_CountInducedC4)->Arg(60)->Arg(300);

}  // namespace
BENCHMARK_MAIN();
