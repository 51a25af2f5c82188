#include <benchmark/benchmark.h>

#include "kummer/engine.hpp"
#include "kummer/generator.hpp"
#include "kummer/oracle.hpp"

namespace {

using namespace kummer;

TowerSpec five_factors() { return make_spec(3, 3, 5, 19, {{1, 0}, {1, 1}, {2, 3}, {4, 9}, {10, 19}}); }

void BM_EngineFiveFactors(benchmark::State& state) {
  const TowerSpec spec = five_factors();
  for (auto _ : state) benchmark::DoNotOptimize(compute(spec));
}
BENCHMARK(BM_EngineFiveFactors);

void BM_EngineRandom(benchmark::State& state) {
  GeneratorConfig cfg;
  cfg.primes_p = {2, 3, 5};
  cfg.exponents_n = {static_cast<unsigned>(state.range(0))};
  cfg.factor_counts = {5};
  InstanceGenerator gen(cfg, 5);
  std::vector<TowerSpec> specs;
  for (int k = 0; k < 64; ++k) specs.push_back(gen.next());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(compute(specs[i++ % specs.size()]));
}
BENCHMARK(BM_EngineRandom)->DenseRange(1, 3);

void BM_OracleSmall(benchmark::State& state) {
  const TowerSpec spec = make_spec(2, 1, 17, 13, {{1, 0}, {0, 1}, {1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(sha_oracle(spec));
}
BENCHMARK(BM_OracleSmall);

void BM_OracleOrder81(benchmark::State& state) {
  const TowerSpec spec = make_spec(3, 2, 7, 19, {{1, 0}, {0, 1}, {1, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(sha_oracle(spec, {81, 64}));
}
BENCHMARK(BM_OracleOrder81)->Unit(benchmark::kMillisecond);

void BM_OracleFiveFactors(benchmark::State& state) {
  const TowerSpec spec = five_factors();
  for (auto _ : state) benchmark::DoNotOptimize(sha_oracle(spec, {729, 200}));
}
BENCHMARK(BM_OracleFiveFactors)->Unit(benchmark::kMillisecond);

void BM_SubgroupJoinIntersect(benchmark::State& state) {
  const auto ctx = PrimePowerCtx::make(3, 5);
  const Subgroup2 a = Subgroup2::cyclic(Vec2Mod::make(7, 54, ctx));
  const Subgroup2 b = Subgroup2::cyclic(Vec2Mod::make(27, 11, ctx));
  for (auto _ : state) {
    benchmark::DoNotOptimize(join(a, b));
    benchmark::DoNotOptimize(intersect(a, b));
  }
}
BENCHMARK(BM_SubgroupJoinIntersect);

}  // namespace
BENCHMARK_MAIN();
