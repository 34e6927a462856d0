#include <benchmark/benchmark.h>

#include "frz/compress.hpp"
#include "frz/mask_space.hpp"
#include "frz/rng.hpp"
#include "frz/search.hpp"
#include "frz/setops.hpp"

using namespace frz;

namespace {

DenseSet random_set(std::uint32_t p, std::uint32_t n, double density, std::uint64_t stream) {
  return sample_set(GroupParams(p, n), CounterRng(kDefaultSeed, stream), density);
}

void BM_Sumset(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<std::uint32_t>(state.range(1));
  const DenseSet a = random_set(p, n, 0.05, 1);
  const DenseSet b = random_set(p, n, 0.05, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sumset(a, b));
  state.counters["|A|"] = static_cast<double>(a.size());
}
BENCHMARK(BM_Sumset)->Args({3, 6})->Args({3, 9})->Args({5, 5})->Args({7, 4});

void BM_SumsetThreads(benchmark::State& state) {
  const DenseSet a = random_set(3, 10, 0.02, 3);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sumset(a, a, threads));
}
BENCHMARK(BM_SumsetThreads)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_MaskSumset(benchmark::State& state) {
  const MaskSpace ms(GroupParams(3, 3));
  std::uint64_t w = 0x2A5A5A5ull;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ms.sumset(w, w));
    w = (w * 0x9E3779B97F4A7C15ull + 1) & ms.full();
  }
}
BENCHMARK(BM_MaskSumset);

void BM_Compress(benchmark::State& state) {
  const GroupParams g(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
  const DenseSet a = random_set(g.p(), g.n(), 0.3, 4);
  const LineTableCache cache(g);
  const LineTable& t = cache.table(cache.directions().size() / 2);
  for (auto _ : state) benchmark::DoNotOptimize(compress(a, t));
}
BENCHMARK(BM_Compress)->Args({3, 6})->Args({5, 4})->Args({7, 3});

void BM_Reduce(benchmark::State& state) {
  const GroupParams g(5, 3);
  DenseSet a = random_set(5, 3, 0.2, 5);
  a |= basis_set(g);
  const LineTableCache cache(g);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(a, cache));
}
BENCHMARK(BM_Reduce);

void BM_FrontierPlaneOverThree(benchmark::State& state) {
  SearchConfig cfg;
  cfg.p = 3;
  cfg.n = 2;
  for (auto _ : state) benchmark::DoNotOptimize(frontier_exhaustive(cfg));
}
BENCHMARK(BM_FrontierPlaneOverThree)->Unit(benchmark::kMillisecond);

void BM_EnumerateECompressed(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_E_compressed(3, 3, threads));
}
BENCHMARK(BM_EnumerateECompressed)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
