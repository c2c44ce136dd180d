#include <random>

#include <benchmark/benchmark.h>

#include "centext/coset.hpp"
#include "centext/group_table.hpp"
#include "centext/homology.hpp"
#include "centext/matrix.hpp"
#include "centext/presentation.hpp"

namespace {

using namespace centext;

void BM_Snf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(snf(a));
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_ToddCoxeterBurnside23(benchmark::State& state) {
  const auto p = build_burnside(2, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(p, {}));
}
BENCHMARK(BM_ToddCoxeterBurnside23)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Realize(benchmark::State& state) {
  const auto table = todd_coxeter(build_burnside(2, 3, 3), {});
  for (auto _ : state) benchmark::DoNotOptimize(realize(table));
}
BENCHMARK(BM_Realize);

void BM_CocycleH2(benchmark::State& state) {
  const auto g = realize(todd_coxeter(build_burnside(2, 3, 3), {}));
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_h2_dim(g, 3));
}
BENCHMARK(BM_CocycleH2)->Unit(benchmark::kMillisecond);

void BM_RelationModule(benchmark::State& state) {
  const auto system = schreier_system(2, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(relation_module(system, 3));
}
BENCHMARK(BM_RelationModule)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
