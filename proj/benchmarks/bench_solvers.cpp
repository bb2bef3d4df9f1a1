#include <benchmark/benchmark.h>

#include "cffa/color_coding.hpp"
#include "cffa/near_complete.hpp"
#include "cffa/oracle.hpp"
#include "cffa/reductions.hpp"
#include "cffa/sbmwis.hpp"
#include "cffa/structured.hpp"
#include "cffa/subset_convolution.hpp"

namespace {

using namespace cffa;

// Shared utility row, eta above a third of the total: a no-instance for three agents.
Instance no_instance(int m, std::uint64_t seed) {
  GeneratorOptions options;
  options.agents = 3;
  options.uniform = true;
  options.seed = seed;
  const auto inst = gen_random(m, 0.3, options);
  Utility total = 0;
  for (int x = 0; x < m; ++x) total += inst.utility(0, x);
  return Instance(inst.agents(), inst.jobs(), inst.utilities(), inst.conflict(), total / 3 + 1);
}

void BM_SubsetConvolution(benchmark::State& state) {
  const auto inst = no_instance(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_fpt_items(inst).feasible);
}
BENCHMARK(BM_SubsetConvolution)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);

void BM_SubsetDp(benchmark::State& state) {
  const auto inst = no_instance(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(subset_dp_cffa(inst).feasible);
}
BENCHMARK(BM_SubsetDp)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const auto inst = no_instance(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_cffa(inst).feasible);
}
BENCHMARK(BM_BruteForce)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_ColorCoding(benchmark::State& state) {
  GeneratorOptions options;
  options.agents = 2;
  options.bundle_cap = 2;
  options.eta = 12;
  options.seed = 3;
  const auto inst = gen_random(static_cast<int>(state.range(0)), 0.3, options);
  for (auto _ : state) benchmark::DoNotOptimize(solve_color_coding(inst, {}).feasible);
}
BENCHMARK(BM_ColorCoding)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

void BM_BranchingDegenerate(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0));
  const auto g = random_degenerate_graph(v, 3, 5);
  SbMwisInstance inst{g, std::vector<Utility>(static_cast<std::size_t>(v), 1), 5, 5};
  for (std::size_t i = 0; i < inst.weights.size(); ++i) inst.weights[i] = 1 + i % 7;
  inst.target = 25;
  const auto profile = IndependenceFriendlyProfile::degenerate(3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_ifc_branching(inst, profile).feasible);
}
BENCHMARK(BM_BranchingDegenerate)->RangeMultiplier(2)->Range(16, 64);

void BM_CompleteGraph(benchmark::State& state) {
  GeneratorOptions options;
  options.agents = 60;
  options.eta = 5;
  options.seed = 7;
  const auto inst = gen_near_complete(static_cast<int>(state.range(0)), 0, options);
  for (auto _ : state) benchmark::DoNotOptimize(solve_complete_graph(inst).feasible);
}
BENCHMARK(BM_CompleteGraph)->RangeMultiplier(2)->Range(50, 400);

void BM_NearCompleteGuess(benchmark::State& state) {
  GeneratorOptions options;
  options.agents = 3;
  options.eta = 12;
  options.seed = 9;
  const auto inst = gen_near_complete(24, static_cast<std::uint64_t>(state.range(0)), options);
  for (auto _ : state) benchmark::DoNotOptimize(solve_guess_per_agent(inst).feasible);
}
BENCHMARK(BM_NearCompleteGuess)->DenseRange(2, 10, 4)->Unit(benchmark::kMillisecond);

void BM_NearCompletePartition(benchmark::State& state) {
  GeneratorOptions options;
  options.agents = 3;
  options.eta = 12;
  options.seed = 9;
  const auto inst = gen_near_complete(24, static_cast<std::uint64_t>(state.range(0)), options);
  for (auto _ : state) benchmark::DoNotOptimize(solve_partition_contract(inst).feasible);
}
BENCHMARK(BM_NearCompletePartition)->DenseRange(2, 8, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
