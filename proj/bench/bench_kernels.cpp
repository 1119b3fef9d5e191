// Serial reference vs OpenMP path for the three parallel kernels.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "spinbell/optimizer.hpp"
#include "spinbell/sampler.hpp"
#include "spinbell/scan.hpp"

using namespace spinbell;

namespace {

Execution mode(const benchmark::State& st) {
  return st.range(0) ? Execution::Parallel : Execution::Serial;
}

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void BM_Scan(benchmark::State& st) {
  ScanSpec spec;
  for (auto& a : spec.axes) a = AxisBinding::grid(7);
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        scan_w(EntangledState::triplet(), {Sign::Plus, Sign::Plus}, spec, mode(st)));
  }
  st.SetItemsProcessed(st.iterations() * scan_row_count(spec));
  label(st);
}
BENCHMARK(BM_Scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Sample(benchmark::State& st) {
  const std::uint64_t shots = 1'000'000;
  for (auto _ : st) {
    benchmark::DoNotOptimize(sample_outcomes(EntangledState::triplet(), Direction(1.0, 0.5),
                                             Direction(2.0, 3.0), shots, 42, 0, mode(st)));
  }
  st.SetItemsProcessed(st.iterations() * shots);
  label(st);
}
BENCHMARK(BM_Sample)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MaximizeW(benchmark::State& st) {
  SearchConfig c;
  c.fix_state = false;
  for (auto _ : st) benchmark::DoNotOptimize(maximize_w(EntangledState::triplet(), c, mode(st)));
  label(st);
}
BENCHMARK(BM_MaximizeW)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
