#include <benchmark/benchmark.h>

#include "fpg/abelian.hpp"
#include "fpg/coset_table.hpp"
#include "fpg/group_id.hpp"
#include "fpg/rp2/braid.hpp"
#include "fpg/rp2/checks.hpp"
#include "fpg/series.hpp"
#include "fpg/wp.hpp"

using namespace fpg;

static void BM_EnumerateB2(benchmark::State& state) {
  auto p = rp2::braid_presentation(2);
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(p, {}).size());
}
BENCHMARK(BM_EnumerateB2);

static void BM_EnumerateL(benchmark::State& state) {
  auto p = group_model("L").presentation;
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(p, {}).size());
}
BENCHMARK(BM_EnumerateL);

static void BM_Gamma2B4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rp2::gamma2_rs(4).presentation.generator_count());
}
BENCHMARK(BM_Gamma2B4)->Unit(benchmark::kMillisecond);

static void BM_InvariantsB4Stage3(benchmark::State& state) {
  DerivedSeries ds(rp2::braid_presentation(4), 2);
  auto const& top = ds.stage(2);
  auto rs = commutator_subgroup(top.presentation);
  for (auto _ : state) benchmark::DoNotOptimize(abelian_invariants(rs.presentation).free_rank);
}
BENCHMARK(BM_InvariantsB4Stage3)->Unit(benchmark::kMillisecond);

static void BM_KnuthBendixQ8(benchmark::State& state) {
  auto p = group_model("Q8").presentation;
  for (auto _ : state) benchmark::DoNotOptimize(knuth_bendix(p).rules().size());
}
BENCHMARK(BM_KnuthBendixQ8);

BENCHMARK_MAIN();
