// Microbenchmarks for the hot paths: partition counting and enumeration,
// jet-sheaf Chern totals, the splitting-principle oracle, weighted section
// counts, threshold scans, and the full table audit.

#include <benchmark/benchmark.h>

#include <jetchern/chern_ring.hpp>
#include <jetchern/combinatorics.hpp>
#include <jetchern/jet_sheaf.hpp>
#include <jetchern/positivity.hpp>
#include <jetchern/wps.hpp>

using namespace jetchern;

static void BM_PartitionCount(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p_total(m));
}
BENCHMARK(BM_PartitionCount)->Arg(100)->Arg(500);

static void BM_EnumerateWeighted(benchmark::State& state) {
  for (auto _ : state) {
    auto v = enumerate_weighted(24, 6);
    benchmark::DoNotOptimize(v.data());
  }
}
BENCHMARK(BM_EnumerateWeighted);

static void BM_JetChernSurface(benchmark::State& state) {
  for (auto _ : state) {
    JetSheafReport rep = jet_chern_surface(3, 6);
    benchmark::DoNotOptimize(rep.total.a2);
  }
}
BENCHMARK(BM_JetChernSurface);

static void BM_RootOracleFactor(benchmark::State& state) {
  const WeightedPartition I{{2, 2, 0}};  // Sym^2 (x) Sym^2, rank 9
  for (auto _ : state) {
    SurfaceChern c = oracle_from_roots(factor_roots(I));
    benchmark::DoNotOptimize(c.a2);
  }
}
BENCHMARK(BM_RootOracleFactor);

static void BM_SectionCount(benchmark::State& state) {
  const WeightTuple q{Int(2), Int(3), Int(4), Int(6), Int(7)};
  const Int m(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(section_count(q, m));
}
BENCHMARK(BM_SectionCount)->Arg(500)->Arg(5000);

static void BM_HypersurfaceThreshold(benchmark::State& state) {
  for (auto _ : state) {
    ThresholdResult t = hypersurface_threshold(2, 2, Source::oracle);
    benchmark::DoNotOptimize(t.d_star);
  }
}
BENCHMARK(BM_HypersurfaceThreshold);

static void BM_VerifyTables(benchmark::State& state) {
  for (auto _ : state) {
    ErratumReport rep = verify_tables();
    benchmark::DoNotOptimize(rep.cells.data());
  }
}
BENCHMARK(BM_VerifyTables);

BENCHMARK_MAIN();
