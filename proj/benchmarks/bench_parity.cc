#include <benchmark/benchmark.h>

#include "parity/monodromy.hh"
#include "parity/nearby.hh"
#include "parity/render.hh"
#include "parity/weyl.hh"

using namespace parity;

static void BM_BuildTower(benchmark::State& state) {
  BaseRing R = BaseRing::Z();
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psi_mix(R, n));
}
BENCHMARK(BM_BuildTower)->DenseRange(2, 8, 2);

static void BM_ValidateTower(benchmark::State& state) {
  BaseRing R = BaseRing::Z();
  DifferentialComplex c = psi_mix(R, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    UsageLedger ledger;
    benchmark::DoNotOptimize(validate(c, ledger));
  }
}
BENCHMARK(BM_ValidateTower)->DenseRange(2, 8, 2);

static void BM_TheoremSuite(benchmark::State& state) {
  BaseRing R = BaseRing::Z();
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(suite_theorem(R, n));
}
BENCHMARK(BM_TheoremSuite)->DenseRange(2, 6, 2);

static void BM_MonodromyFiltration(benchmark::State& state) {
  GradedObject o = psi_total(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(monodromy_filtration(o));
}
BENCHMARK(BM_MonodromyFiltration)->DenseRange(2, 8, 2);

static void BM_AdmissibleElements(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(admissible_elements(n));
}
BENCHMARK(BM_AdmissibleElements)->DenseRange(2, 8, 2);

static void BM_HeckeSubexpression(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ReducedWord w = fundamental_translation(n, 1).second;
  for (auto _ : state) benchmark::DoNotOptimize(hecke_subexpression_check(w));
}
BENCHMARK(BM_HeckeSubexpression)->DenseRange(2, 8, 2);

static void BM_RenderLatex(benchmark::State& state) {
  BaseRing R = BaseRing::Z();
  DifferentialComplex c = psi_mix(R, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(render_latex(c));
}
BENCHMARK(BM_RenderLatex)->DenseRange(2, 6, 2);

static void BM_BoxRecursion(benchmark::State& state) {
  BaseRing R = BaseRing::Z();
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(suite_recursion(R, n));
}
BENCHMARK(BM_BoxRecursion)->DenseRange(2, 6, 2);

BENCHMARK_MAIN();
