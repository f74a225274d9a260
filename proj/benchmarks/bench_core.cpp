#include <benchmark/benchmark.h>

#include "ceresa/ceresa.hpp"

using namespace ceresa;

static void BM_DecideTorsion(benchmark::State& state) {
  const PicardCurve C({Rat(-12), Rat(1), Rat(-12)});
  for (auto _ : state) benchmark::DoNotOptimize(decide(C));
}
BENCHMARK(BM_DecideTorsion);

// Non-torsion points run the full twelve-step search with growing heights.
static void BM_DecideNonTorsion(benchmark::State& state) {
  const PicardCurve C({Rat(1), Rat(0), Rat(1)});
  for (auto _ : state) benchmark::DoNotOptimize(decide(C));
}
BENCHMARK(BM_DecideNonTorsion);

static void BM_RationalTorsionJ0(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rational_torsion_j0(Rat(1)));
}
BENCHMARK(BM_RationalTorsionJ0);

static void BM_Scan(benchmark::State& state) {
  const auto axis = parse_axis("-3:3");
  const ScanGrid grid{axis, axis, axis};
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan(grid, {threads}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(4)->UseRealTime();

static void BM_DimInvWedge3(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  const ActionProfile p = dihedral_profile(m, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dim_inv_wedge3(p, Space::H1));
}
BENCHMARK(BM_DimInvWedge3)->Arg(7)->Arg(15)->Arg(31);

static void BM_CyclotomicProduct(benchmark::State& state) {
  const auto L = static_cast<std::uint32_t>(state.range(0));
  const CycNum z = root_of_unity(L, 1) + CycNum(L, Rat(2));
  for (auto _ : state) benchmark::DoNotOptimize(pow(z, 50));
}
BENCHMARK(BM_CyclotomicProduct)->Arg(9)->Arg(35)->Arg(105);

BENCHMARK_MAIN();
