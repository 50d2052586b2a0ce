// Wall-clock microbenchmarks for the gapped-insertion sort against the
// quadratic baselines and std::sort, on uniform random inputs. The counter
// based comparisons live in the CLI bench subcommand; this file is for raw
// timing and asymptotic fits.
#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "libsort/baselines.hpp"
#include "libsort/library_sort.hpp"
#include "libsort/rng.hpp"

namespace {

std::vector<std::int64_t> random_keys(std::size_t n, std::uint64_t seed) {
  libsort::SplitMix64 gen(seed);
  std::vector<std::int64_t> keys(n);
  for (auto& k : keys) k = static_cast<std::int64_t>(gen.next());
  return keys;
}

void BM_LibrarySort(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto input = random_keys(n, 42);
  libsort::SortParams params;
  params.seed = 7;
  for (auto _ : state) {
    auto result = libsort::library_sort(input, params);
    benchmark::DoNotOptimize(result.sorted.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LibrarySort)
    ->RangeMultiplier(4)
    ->Range(1 << 10, 1 << 18)
    ->Complexity(benchmark::oNLogN);

void BM_StdSort(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto input = random_keys(n, 42);
  for (auto _ : state) {
    auto keys = input;
    std::sort(keys.begin(), keys.end());
    benchmark::DoNotOptimize(keys.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StdSort)
    ->RangeMultiplier(4)
    ->Range(1 << 10, 1 << 18)
    ->Complexity(benchmark::oNLogN);

void BM_InsertionSort(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto input = random_keys(n, 42);
  for (auto _ : state) {
    auto result = libsort::insertion_sort(input);
    benchmark::DoNotOptimize(result.sorted.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_InsertionSort)
    ->RangeMultiplier(4)
    ->Range(1 << 8, 1 << 13)
    ->Complexity(benchmark::oNSquared);

void BM_BinaryInsertionSort(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto input = random_keys(n, 42);
  for (auto _ : state) {
    auto result = libsort::binary_insertion_sort(input);
    benchmark::DoNotOptimize(result.sorted.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BinaryInsertionSort)
    ->RangeMultiplier(4)
    ->Range(1 << 8, 1 << 13)
    ->Complexity(benchmark::oNSquared);

}  // namespace

BENCHMARK_MAIN();
