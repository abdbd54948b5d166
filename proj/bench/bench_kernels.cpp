// Serial reference vs OpenMP kernels: box certification and rounding trials.
#include <benchmark/benchmark.h>

#include "judicious/assign.hpp"
#include "judicious/certify_kernel.hpp"
#include "judicious/lemma_verify.hpp"

using namespace judicious;
using namespace judicious::verify;

namespace {

// 1a row {x23=0, b13=8x23, a1=0} at the table's box side
CertGrid sample_grid() {
  const auto& s = builtin_system(SystemId::k1a);
  const auto c = enumerate_cases(s)[1];
  return build_grid(reduce_case(s, c), *c.epsilon);
}

struct Rounding {
  Hypergraph h;
  HighLowSplit split;
  HighPartition high;
  QTriple q;
};

Rounding sample_rounding() {
  Rounding r;
  r.h = gen_random(400, 40000, 1);
  r.split = split_high_low(r.h, 2.0 / 7.0);
  const auto g = build_multigraph(r.h, r.split);
  r.high = local_search_partition(g, 0);
  place_isolated_high(r.h, r.split, g, r.high);
  r.q = solve_q(normalize(compute_profile(r.h, r.split, r.high)));
  return r;
}

void BM_CertifySerial(benchmark::State& state) {
  const auto grid = sample_grid();
  for (auto _ : state) benchmark::DoNotOptimize(certify_grid_serial(grid));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.total_cells()));
}

void BM_CertifyParallel(benchmark::State& state) {
  const auto grid = sample_grid();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_grid_parallel(grid, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.total_cells()));
}

void BM_TrialsSerial(benchmark::State& state) {
  const auto r = sample_rounding();
  for (auto _ : state) benchmark::DoNotOptimize(run_trials_serial(r.h, r.split, r.high, r.q, 64, 0));
  state.SetItemsProcessed(state.iterations() * 64);
}

void BM_TrialsParallel(benchmark::State& state) {
  const auto r = sample_rounding();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials(r.h, r.split, r.high, r.q, 64, 0, jobs));
  state.SetItemsProcessed(state.iterations() * 64);
}

}  // namespace

BENCHMARK(BM_CertifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
