#include "pseudo/hopf.hpp"

#include <benchmark/benchmark.h>

using namespace pseudo;

namespace {

HopfPtr algebra(int which) {
  return HopfAlgebra::make(which == 0 ? LieAlgebraPresentation::abelian(2) : LieAlgebraPresentation::solvable2());
}

// Fresh algebra per iteration so the straightening cache starts empty.
void BM_MulCold(benchmark::State& state) {
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    HopfPtr H = algebra(static_cast<int>(state.range(0)));
    for (const auto& I : indices_up_to(2, d))
      for (const auto& J : indices_up_to(2, d - I.degree()))
        benchmark::DoNotOptimize(H->mul(HopfElement::monomial(I), HopfElement::monomial(J)));
  }
}
BENCHMARK(BM_MulCold)->ArgsProduct({{0, 1}, {4, 6, 8}});

void BM_MulWarm(benchmark::State& state) {
  HopfPtr H = algebra(static_cast<int>(state.range(0)));
  const int d = static_cast<int>(state.range(1));
  auto idx = indices_up_to(2, d);
  for (auto _ : state)
    for (const auto& I : idx)
      for (const auto& J : idx) benchmark::DoNotOptimize(H->mul_monomials(I, J));
}
BENCHMARK(BM_MulWarm)->ArgsProduct({{0, 1}, {3, 5}});

void BM_Coproduct(benchmark::State& state) {
  HopfPtr H = algebra(1);
  const int parts = static_cast<int>(state.range(0));
  auto idx = indices_up_to(2, static_cast<int>(state.range(1)));
  for (auto _ : state)
    for (const auto& I : idx) benchmark::DoNotOptimize(H->coproduct(HopfElement::monomial(I), parts));
}
BENCHMARK(BM_Coproduct)->ArgsProduct({{2, 3}, {4, 6}});

void BM_Antipode(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    HopfPtr H = algebra(1);
    for (const auto& I : indices_up_to(2, d)) benchmark::DoNotOptimize(H->antipode_monomial(I));
  }
}
BENCHMARK(BM_Antipode)->Arg(4)->Arg(6);

}  // namespace
