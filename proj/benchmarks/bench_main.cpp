#include <benchmark/benchmark.h>

#include "dps/families.hpp"
#include "dps/recurrence.hpp"
#include "dps/symmetry.hpp"

namespace {

dps::FamilySpec humbert(std::size_t order) {
  return dps::make_family("humbert", {{"d", 3}, {"beta", dps::make_rat(1, 2)}}, order);
}

void BM_Expand(benchmark::State& state) {
  const auto f = humbert(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dps::expand_ps(f.gen));
}
BENCHMARK(BM_Expand)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Extract(benchmark::State& state) {
  const auto ps = dps::expand_ps(humbert(static_cast<std::size_t>(state.range(0))).gen);
  for (auto _ : state) benchmark::DoNotOptimize(dps::extract_recurrence(ps));
}
BENCHMARK(BM_Extract)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_VerifyIdentities(benchmark::State& state) {
  const auto f = humbert(static_cast<std::size_t>(state.range(0)));
  const auto table = dps::extract_recurrence(dps::expand_ps(f.gen));
  for (auto _ : state) benchmark::DoNotOptimize(dps::verify_prop2(f.gen, table, f.d));
}
BENCHMARK(BM_VerifyIdentities)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_RecoverR(benchmark::State& state) {
  const auto f = humbert(40);
  const auto table = dps::extract_recurrence(dps::expand_ps(f.gen));
  const auto kmax = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dps::recover_r(f.gen.alpha, table, kmax));
}
BENCHMARK(BM_RecoverR)->Arg(9)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_HypergeometricRep(benchmark::State& state) {
  const auto f = humbert(40);
  const auto blocks = dps::F_hypergeom_rep(*f.symmetric);
  for (auto _ : state) benchmark::DoNotOptimize(dps::verify_F_rep(*f.symmetric, blocks, 40));
}
BENCHMARK(BM_HypergeometricRep)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
