#include <gkzhodge/bernstein.hpp>
#include <gkzhodge/gkz.hpp>
#include <gkzhodge/groebner.hpp>
#include <gkzhodge/homological.hpp>

#include <benchmark/benchmark.h>

using namespace gkz;

namespace {

const IntMatrix desk_a{{1, 1}, {0, 1}};
const IntMatrix desk_b{{1, 1, 1}, {0, 1, 2}};
const IntMatrix square_cone{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}};

void BM_BuchbergerGkz(benchmark::State& state) {
  IntMatrix cubic{{1, 1, 1, 1}, {0, 1, 2, 3}};
  SystemPresentation sys = build_gkz(cubic, IntVec{Int(1), Int(2)});
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(sys.generators, TermOrder(sys.signature)));
}
BENCHMARK(BM_BuchbergerGkz)->Unit(benchmark::kMillisecond);

void BM_BernsteinSquareCone(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bernstein_exponent(square_cone));
}
BENCHMARK(BM_BernsteinSquareCone)->Unit(benchmark::kMillisecond);

void BM_IshidaScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(local_cohomology_scan(desk_a));
}
BENCHMARK(BM_IshidaScan)->Unit(benchmark::kMillisecond);

void BM_SymbolKoszul(benchmark::State& state) {
  const IntMatrix& a = state.range(0) == 0 ? desk_a : desk_b;
  for (auto _ : state) benchmark::DoNotOptimize(euler_symbol_koszul(a, 0));
}
BENCHMARK(BM_SymbolKoszul)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DualityStrictness(benchmark::State& state) {
  DualityMorphism phi = duality_morphism(duality_data(homogenize(desk_b)));
  for (auto _ : state) benchmark::DoNotOptimize(strictness_check(phi, state.range(0)));
}
BENCHMARK(BM_DualityStrictness)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
