#include "flagiso/chevalley.hpp"
#include "flagiso/classify.hpp"
#include "flagiso/decomp.hpp"
#include "flagiso/mclass.hpp"
#include "flagiso/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace flagiso;

namespace {

// Argument: rank of E.
void BM_BuildRootSystemE(benchmark::State& state) {
  auto t = DynkinType::make('E', static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem(t).num_roots());
}
BENCHMARK(BM_BuildRootSystemE)->DenseRange(6, 8);

void BM_StructureConstantsE8(benchmark::State& state) {
  RootSystem sys(DynkinType::make('E', 8));
  for (auto _ : state) benchmark::DoNotOptimize(StructureConstants(sys)(0, 1));
}
BENCHMARK(BM_StructureConstantsE8);

void BM_MClassesE8(benchmark::State& state) {
  RootSystem sys(DynkinType::make('E', 8));
  for (auto _ : state) benchmark::DoNotOptimize(positive_m_classes(sys).size());
}
BENCHMARK(BM_MClassesE8);

void BM_ComponentsAllThetaB6(benchmark::State& state) {
  RootSystem sys(DynkinType::make('B', 6));
  for (auto _ : state)
    for (std::uint32_t bits = 0; bits + 1 < (1u << 6); ++bits)
      benchmark::DoNotOptimize(z_components(sys, ThetaSubset(6, bits)).size());
}
BENCHMARK(BM_ComponentsAllThetaB6);

void BM_DecomposeF4(benchmark::State& state) {
  RootSystem sys(DynkinType::make('F', 4));
  IsotropyRep rep(sys, ThetaSubset::from_indices(4, {2, 3, 4}));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(rep).size());
}
BENCHMARK(BM_DecomposeF4)->Unit(benchmark::kMillisecond);

void BM_ClassifyB6(benchmark::State& state) {
  auto t = DynkinType::make('B', 6);
  auto th = ThetaSubset::from_indices(6, {2, 6});
  for (auto _ : state) benchmark::DoNotOptimize(classify(t, th).blocks.size());
}
BENCHMARK(BM_ClassifyB6)->Unit(benchmark::kMillisecond);

void BM_ClassifyVerifiedD5(benchmark::State& state) {
  auto t = DynkinType::make('D', 5);
  auto th = ThetaSubset::empty(5);
  for (auto _ : state) benchmark::DoNotOptimize(classify(t, th, {true}).report.oracle.verified);
}
BENCHMARK(BM_ClassifyVerifiedD5)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
