#include <benchmark/benchmark.h>

#include <vector>

#include "overlay/classify.hpp"
#include "overlay/generate.hpp"
#include "overlay/oracle.hpp"
#include "overlay/solver.hpp"

namespace {

using namespace overlay;

std::vector<Instance> random_instances(const FamilySpec& family, int vertices, int count) {
  std::vector<Instance> out;
  for (int seed = 0; static_cast<int>(out.size()) < count; ++seed) {
    Instance inst(random_hypergraph({.vertices = vertices, .hyperedges = 5, .min_size = 2, .max_size = 5},
                                    static_cast<std::uint64_t>(seed)),
                  family);
    if (feasible(inst)) out.push_back(std::move(inst));
  }
  return out;
}

void BM_SunflowerExact(benchmark::State& state) {
  const Instance inst(sunflower(static_cast<int>(state.range(0)), 2), FamilySpec::connected());
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(inst));
}
BENCHMARK(BM_SunflowerExact)->Arg(3)->Arg(6)->Arg(10);

void BM_RandomExact(benchmark::State& state) {
  const auto corpus = random_instances(FamilySpec::connected(), static_cast<int>(state.range(0)), 20);
  BranchOptions options;
  options.transposition = state.range(1) != 0;
  for (auto _ : state) {
    for (const Instance& inst : corpus) benchmark::DoNotOptimize(solve_exact(inst, options));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(corpus.size()));
}
BENCHMARK(BM_RandomExact)->ArgsProduct({{8, 12}, {0, 1}})->ArgNames({"vertices", "transposition"});

void BM_RandomExactWorkers(benchmark::State& state) {
  const auto corpus = random_instances(FamilySpec::hamiltonian(), 10, 10);
  BranchOptions options;
  options.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (const Instance& inst : corpus) benchmark::DoNotOptimize(solve_exact(inst, options));
  }
}
BENCHMARK(BM_RandomExactWorkers)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_Oracle(benchmark::State& state) {
  const auto corpus = random_instances(FamilySpec::explicit_members({Graph::path(3)}), 7, 10);
  for (auto _ : state) {
    for (const Instance& inst : corpus) benchmark::DoNotOptimize(brute_force_oracle(inst, {.cap = 48}));
  }
}
BENCHMARK(BM_Oracle);

void BM_Classify(benchmark::State& state) {
  const FamilySpec family = FamilySpec::connected();
  for (auto _ : state) benchmark::DoNotOptimize(classify(family, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Classify)->Arg(4)->Arg(6);

}  // namespace
BENCHMARK_MAIN();
