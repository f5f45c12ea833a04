#include "pseudo/catalog.hpp"
#include "pseudo/manin.hpp"

#include <benchmark/benchmark.h>

using namespace pseudo;

namespace {

HopfPtr algebra(int which) {
  return HopfAlgebra::make(which == 0 ? LieAlgebraPresentation::abelian(1) : LieAlgebraPresentation::solvable2());
}

void BM_LieCheckSolvable(benchmark::State& state) {
  HopfPtr H = algebra(static_cast<int>(state.range(0)));
  MultiIndex I(H->dim());
  I.set(0, static_cast<int>(state.range(1)));
  PseudoTable T = build_solvable(H, HopfElement::monomial(I)).table;
  for (auto _ : state) benchmark::DoNotOptimize(check_lie_axioms(T).ok);
}
BENCHMARK(BM_LieCheckSolvable)->ArgsProduct({{0, 1}, {0, 2}});

void BM_LieCheckGc(benchmark::State& state) {
  CatalogEntry gc = build_gc(algebra(0), 1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_lie_axioms(gc.table, gc.window).ok);
}
BENCHMARK(BM_LieCheckGc)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Conformal(benchmark::State& state) {
  HopfPtr H = algebra(0);
  PseudoTable T = build_solvable(H, H->gen(0)).table;
  const int deg = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_conformal_axioms(T, deg).ok);
}
BENCHMARK(BM_Conformal)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Double(benchmark::State& state) {
  HopfPtr H = algebra(static_cast<int>(state.range(0)));
  CatalogEntry c = build_solvable(H, H->one(), H->gen(0));
  for (auto _ : state) benchmark::DoNotOptimize(drinfeld_double(c.table, *c.cobracket).cybe.quasitriangular);
}
BENCHMARK(BM_Double)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Dualize(benchmark::State& state) {
  HopfPtr H = algebra(0);
  PseudoTable T = build_solvable(H, HopfElement::monomial({static_cast<int>(state.range(0))})).table;
  for (auto _ : state) benchmark::DoNotOptimize(dualize_to_cobracket(T));
}
BENCHMARK(BM_Dualize)->DenseRange(0, 3);

}  // namespace
BENCHMARK_MAIN();
