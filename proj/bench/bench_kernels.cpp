// Serial reference paths against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "indcover/generators.hpp"
#include "indcover/orient.hpp"
#include "indcover/reduce.hpp"
#include "indcover/suite.hpp"

using namespace indcover;

namespace {

Execution exec_for(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial() : Execution::parallel(0);
}

Digraph doubled_clique_with_tail(int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (v == u + 1) {
        d.add_arc(u, v);
      } else {
        d.add_double(u, v);
      }
    }
  }
  return d;
}

void BM_IsKernelPerfect(benchmark::State& state) {
  const Digraph d = doubled_clique_with_tail(10);
  const Execution exec = exec_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(is_kernel_perfect(d, exec).perfect);
}

void BM_IsFAT(benchmark::State& state) {
  const Graph g = make_named("complete", {5});
  const DegreeTable f = g.degrees();
  const Execution exec = exec_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(is_f_AT(g, f, exec).is_at);
}

void BM_IsOcReducible(benchmark::State& state) {
  const Graph g = make_named("complete", {7});
  const Execution exec = exec_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(is_oc_reducible(g, exec).has_value());
}

void BM_RunSuite(benchmark::State& state) {
  SuiteOptions options;
  options.max_n = 7;
  options.jobs = state.range(0) == 0 ? 1 : 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("mic-strength", options).passed());
}

}  // namespace

BENCHMARK(BM_IsKernelPerfect)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsFAT)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsOcReducible)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunSuite)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
