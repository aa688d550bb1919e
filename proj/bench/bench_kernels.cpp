// Parallel kernels against their serial references. With one core the
// parallel numbers only show scheduling overhead.

#include <benchmark/benchmark.h>

#include <random>

#include "carlson/hj.hpp"
#include "carlson/parallel.hpp"
#include "carlson/towsner.hpp"

using namespace carlson;

namespace {

constexpr std::uint64_t kSlice = 1 << 14;

void lineless_parallel(benchmark::State& state) {
  set_worker_count(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_lineless(2, 2, 3, 0, kSlice));
  set_worker_count(0);
}

void lineless_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_lineless_serial(2, 2, 3, 0, kSlice));
}

Coloring sample(unsigned window) {
  std::mt19937_64 rng(17);
  return Coloring::tabulate(Alphabet("ab"), 2, window, [&](const Word&) { return static_cast<Color>(rng() % 2); });
}

void search_parallel(benchmark::State& state) {
  const auto f = sample(6);
  set_worker_count(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(carlson_search(f, 2, Arity::all()));
  set_worker_count(0);
}

void search_serial(benchmark::State& state) {
  const auto f = sample(6);
  for (auto _ : state) benchmark::DoNotOptimize(carlson_search_serial(f, 2, Arity::all()));
}

}  // namespace

BENCHMARK(lineless_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(lineless_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(search_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(search_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
