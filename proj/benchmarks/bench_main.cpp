#include <benchmark/benchmark.h>

#include "rlie/catalog.hpp"
#include "rlie/charpoly.hpp"
#include "rlie/enveloping.hpp"
#include "rlie/invariants.hpp"
#include "rlie/sampling.hpp"

using namespace rlie;

static void BM_FieldMul(benchmark::State& state) {
  const Field F = Field::extension(2, static_cast<int>(state.range(0)));
  Rng rng(1, 0);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = rng.element(F);
  for (auto _ : state) {
    Elem acc = F.one();
    for (const auto& x : xs) acc = F.mul(acc, F.add(x, F.one()));
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(4)->Arg(8);

static void BM_CharPolyAt(benchmark::State& state) {
  const auto w = build_wn(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const Field F = Field::extension(w.p, 4);
  Rng rng(2, 0);
  const auto d = random_vector(F, w.dim(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_at(w, F, d));
}
BENCHMARK(BM_CharPolyAt)->Args({1, 2})->Args({2, 2})->Args({1, 7})->Args({3, 2})->Args({2, 3});

static void BM_SymbolicPsi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), p = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_invariants_symbolic(n, p, true));
}
BENCHMARK(BM_SymbolicPsi)->Args({1, 3})->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond);

static void BM_BuildEnveloping(benchmark::State& state) {
  const auto g = catalog_algebra(state.range(0) == 0 ? "W:1:3" : "W:2:2");
  for (auto _ : state) benchmark::DoNotOptimize(build_enveloping(g));
}
BENCHMARK(BM_BuildEnveloping)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_InvariantsSolve(benchmark::State& state) {
  const auto a = adjoint_action(build_wn(2, 2));
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariants_up_to_degree(a, D));
}
BENCHMARK(BM_InvariantsSolve)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
