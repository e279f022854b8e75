#include <benchmark/benchmark.h>

#include "spinfock/canonical.hpp"
#include "spinfock/crystal.hpp"
#include "spinfock/modular.hpp"

using namespace spinfock;

static void BM_ApplyF(benchmark::State& state) {
  const Modulus mod(3);
  const auto basis = enumerate_dp_h(mod, static_cast<int>(state.range(0)));
  FockVector v;
  for (const auto& lambda : basis) v.add(lambda, 1);
  for (auto _ : state) {
    for (int i = 0; i <= mod.n(); ++i) benchmark::DoNotOptimize(apply_f(mod, i, v));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(basis.size()));
}
BENCHMARK(BM_ApplyF)->Arg(8)->Arg(12)->Arg(16);

static void BM_CanonicalFast(benchmark::State& state) {
  const Modulus mod(static_cast<int>(state.range(0)));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_basis(mod, m, {true, 1}));
}
BENCHMARK(BM_CanonicalFast)->Args({3, 10})->Args({3, 16})->Args({5, 16})->Args({7, 21})->Unit(benchmark::kMillisecond);

static void BM_CanonicalSlow(benchmark::State& state) {
  const Modulus mod(static_cast<int>(state.range(0)));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_basis(mod, m, {false, 1}));
}
BENCHMARK(BM_CanonicalSlow)->Args({3, 10})->Args({3, 16})->Args({7, 21})->Unit(benchmark::kMillisecond);

static void BM_CrystalComponent(benchmark::State& state) {
  const Modulus mod(3);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(component(mod, Partition{}, d));
}
BENCHMARK(BM_CrystalComponent)->Arg(20)->Arg(40);

static void BM_ReducedMatrix(benchmark::State& state) {
  const Modulus mod(3);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_matrix(mod, m));
}
BENCHMARK(BM_ReducedMatrix)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
