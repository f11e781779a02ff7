// Serial reference against OpenMP execution for the parallel kernels.

#include <benchmark/benchmark.h>

#include "tcfw/fibrewise.hpp"
#include "tcfw/planner.hpp"
#include "tcfw/ring.hpp"

using namespace tcfw;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_cup_products(benchmark::State& state) {
  const auto t2 = torus();
  static const SimplicialComplex k = product_complex(*t2, *t2);
  static const CohomologyBasis basis(k, Coefficients::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_ring(basis, mode(state)).dimension());
  label(state);
}

void BM_verify_strom(benchmark::State& state) {
  const auto k = torus();
  const auto strom = milnor_strom_structure();
  for (auto _ : state) benchmark::DoNotOptimize(verify_strom(*k, strom, 2000, 1, mode(state)).passed());
  label(state);
}

void BM_verify_lift(benchmark::State& state) {
  const auto f = strom_lift_fixture(torus());
  for (auto _ : state) benchmark::DoNotOptimize(verify_lift(f, 300, 1, mode(state)).passed());
  label(state);
}

void BM_validate_cover(benchmark::State& state) {
  const auto f = circle_cover(12);
  const Cover plus = cover_plus_one(f.cover, milnor_strom_structure());
  for (auto _ : state) benchmark::DoNotOptimize(validate_cover(*f.complex, plus, true, 1000, 1, mode(state)).passed());
  label(state);
}

}  // namespace

BENCHMARK(BM_cup_products)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_strom)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_lift)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_validate_cover)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
