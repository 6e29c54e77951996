// Serial reference vs OpenMP kernel. Arg(0) is the serial reference, Arg(n) runs with n threads.
#include <benchmark/benchmark.h>

#include "capitula/kernels.hpp"

using namespace capitula;

namespace {

void BM_ConjugationInvariance(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = jobs == 0 ? kernels::conjugation_invariance_serial(200000)
                       : kernels::conjugation_invariance_parallel(200000, jobs);
    benchmark::DoNotOptimize(r.checked);
  }
}

void BM_MultiplicityScan(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto h = jobs == 0 ? kernels::multiplicity_scan_serial(2, 100000)
                       : kernels::multiplicity_scan_parallel(2, 100000, jobs);
    benchmark::DoNotOptimize(h.size());
  }
}

void BM_ValidateRows(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  const auto rows = load_embedded_tables();
  const auto protos = catalog_prototypes(load_embedded_catalog());
  for (auto _ : state) {
    auto r = jobs == 0 ? kernels::validate_rows_serial(rows, protos)
                       : kernels::validate_rows_parallel(rows, protos, jobs);
    benchmark::DoNotOptimize(r.size());
  }
}

void BM_VerifyCatalog(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  const auto entries = load_embedded_catalog();
  for (auto _ : state) {
    auto r = jobs == 0 ? kernels::verify_catalog_serial(entries) : kernels::verify_catalog_parallel(entries, jobs);
    benchmark::DoNotOptimize(r.size());
  }
}

}  // namespace

BENCHMARK(BM_ConjugationInvariance)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplicityScan)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateRows)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyCatalog)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
