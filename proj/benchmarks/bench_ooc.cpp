#include <benchmark/benchmark.h>

#include "ooc/construct.hpp"
#include "ooc/search.hpp"
#include "ooc/verify.hpp"

using namespace ooc;

static void BM_verify_3xm(benchmark::State& state) {
  const Code code = ooc_3xm(static_cast<int>(state.range(0))).code;
  for (auto _ : state) benchmark::DoNotOptimize(verify_code(code).ok());
  state.counters["codewords"] = static_cast<double>(code.size());
}
BENCHMARK(BM_verify_3xm)->Arg(24)->Arg(104)->Arg(488);

static void BM_verify_matrix(benchmark::State& state) {
  const Code code = ooc_3xm(static_cast<int>(state.range(0))).code;
  for (auto _ : state) benchmark::DoNotOptimize(verify_by_matrix(code).cross_ok);
}
BENCHMARK(BM_verify_matrix)->Arg(8)->Arg(24);

static void BM_construct_3xm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ooc_3xm(static_cast<int>(state.range(0))).code.size());
}
BENCHMARK(BM_construct_3xm)->Arg(24)->Arg(104)->Arg(488);

static void BM_tight_search(benchmark::State& state) {
  SearchConfig cfg;
  cfg.strategy = Strategy::exact_cover;
  for (auto _ : state) benchmark::DoNotOptimize(tight_search(static_cast<int>(state.range(0)), cfg).success);
}
BENCHMARK(BM_tight_search)->Arg(13)->Arg(61)->Arg(97)->Unit(benchmark::kMillisecond);

static void BM_gdd_search(benchmark::State& state) {
  SearchConfig cfg;
  cfg.strategy = state.range(1) == 0 ? Strategy::exact_cover : Strategy::hill_climb_restart;
  cfg.time_budget_seconds = 300;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gdd_search(4, static_cast<int>(state.range(0)), cfg).success);
  }
}
BENCHMARK(BM_gdd_search)->Args({4, 0})->Args({4, 1})->Args({8, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
