// Serial reference loop against the OpenMP replica loop for each kernel.
// Both modes produce identical numbers; only the wall time differs.
#include <benchmark/benchmark.h>

#include "lpp/estimator.hpp"
#include "lpp/skeleton.hpp"

namespace {

lpp::Execution mode(const benchmark::State& s) {
  return s.range(0) == 0 ? lpp::Execution::Serial : lpp::Execution::Parallel;
}

void label(benchmark::State& s) { s.SetLabel(s.range(0) == 0 ? "serial" : "parallel"); }

void BM_DirectC(benchmark::State& s) {
  const int n = static_cast<int>(s.range(1));
  for (auto _ : s) {
    benchmark::DoNotOptimize(lpp::direct_C(0.5, lpp::Rational(-1, 3), n, 200, 1, mode(s)).mean);
  }
  label(s);
  s.SetItemsProcessed(s.iterations() * 200);
}
BENCHMARK(BM_DirectC)->ArgsProduct({{0, 1}, {100, 400}})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_DirectCFloat(benchmark::State& s) {
  for (auto _ : s) {
    benchmark::DoNotOptimize(lpp::direct_C(0.5, lpp::WeightParam(0.37), 200, 200, 1, mode(s)).mean);
  }
  label(s);
}
BENCHMARK(BM_DirectCFloat)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SideDerivatives(benchmark::State& s) {
  for (auto _ : s) {
    benchmark::DoNotOptimize(lpp::side_derivatives(0.5, lpp::Rational(0), 200, 200, 1, mode(s)).jump);
  }
  label(s);
}
BENCHMARK(BM_SideDerivatives)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_DeltaPmf(benchmark::State& s) {
  for (auto _ : s) {
    benchmark::DoNotOptimize(lpp::delta_pmf_mc(0.5, 150, 500, 1, mode(s)).mean);
  }
  label(s);
}
BENCHMARK(BM_DeltaPmf)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Renewal(benchmark::State& s) {
  for (auto _ : s) {
    benchmark::DoNotOptimize(lpp::renewal_C(0.6, lpp::Rational(1, 2), 100, 500, 1, mode(s)).mean);
  }
  label(s);
}
BENCHMARK(BM_Renewal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
