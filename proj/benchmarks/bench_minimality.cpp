#include <benchmark/benchmark.h>

#include "posetcode/code.hpp"
#include "posetcode/minimality.hpp"
#include "posetcode/poset.hpp"
#include "posetcode/theorems.hpp"

using namespace posetcode;

namespace {

DefiningSet d0_set(int m, int l) {
  const HierarchicalPoset p(m, l);
  return DefiningSet::from_vectors(p.n(), d0_vectors(p));
}

void BM_weight_distribution(benchmark::State& state) {
  const DefiningSet d = d0_set(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(d).w_min);
}
BENCHMARK(BM_weight_distribution)->Args({3, 3})->Args({4, 4})->Args({5, 5});

void BM_code_minimal_definitional(benchmark::State& state) {
  const DefiningSet d = d0_set(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        code_is_minimal_reducing(d, Method::definitional).result);
}
BENCHMARK(BM_code_minimal_definitional)
    ->Args({3, 3})
    ->Args({4, 4})
    ->Args({5, 5});

void BM_code_minimal_geometric(benchmark::State& state) {
  const DefiningSet d = d0_set(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        code_is_minimal_reducing(d, Method::geometric).result);
}
BENCHMARK(BM_code_minimal_geometric)
    ->Args({3, 3})
    ->Args({4, 4})
    ->Args({5, 5});

void BM_family_sweep(benchmark::State& state) {
  SweepOptions options;
  options.m_max = static_cast<int>(state.range(0));
  options.l_max = static_cast<int>(state.range(1));
  options.n_max = 8;
  options.t_max = 2;
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep(options).instances.size());
}
BENCHMARK(BM_family_sweep)
    ->Args({2, 3})
    ->Args({3, 3})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
