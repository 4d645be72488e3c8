#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "posetcode/gf2.hpp"

using namespace posetcode;

namespace {

std::vector<BitVec> random_vectors(int k, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(
      1, k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
  std::vector<BitVec> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.emplace_back(k, pick(rng));
  return out;
}

void BM_rank(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto vectors =
      random_vectors(k, static_cast<int>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rank(vectors));
  state.SetItemsProcessed(state.iterations() * vectors.size());
}
BENCHMARK(BM_rank)->Args({16, 256})->Args({32, 1024})->Args({64, 4096});

void BM_kernel(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto vectors =
      random_vectors(k, static_cast<int>(state.range(1)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(vectors, k).dim());
}
BENCHMARK(BM_kernel)->Args({16, 256})->Args({32, 1024})->Args({64, 4096});

void BM_coset_canonicalize(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  EchelonBasis basis(k);
  for (const BitVec& v : random_vectors(k, k / 2, 13)) basis.insert(v);
  const auto stream = random_vectors(k, 1024, 17);
  for (auto _ : state)
    for (const BitVec& v : stream) benchmark::DoNotOptimize(basis.reduce(v));
  state.SetItemsProcessed(state.iterations() * stream.size());
}
BENCHMARK(BM_coset_canonicalize)->Arg(16)->Arg(32)->Arg(64);

void BM_reduce_to_full_rank(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  // Half the coordinates stay zero, so the span is a proper subspace.
  auto vectors = random_vectors(k / 2, static_cast<int>(state.range(1)), 19);
  std::vector<BitVec> embedded;
  embedded.reserve(vectors.size());
  for (const BitVec& v : vectors) embedded.emplace_back(k, v.mask());
  for (auto _ : state)
    benchmark::DoNotOptimize(reduce_to_full_rank(embedded, k).reduced_width);
}
BENCHMARK(BM_reduce_to_full_rank)->Args({16, 256})->Args({32, 1024});

}  // namespace

BENCHMARK_MAIN();
