#include <benchmark/benchmark.h>

#include "sylowscope/catalog.hpp"
#include "sylowscope/census.hpp"
#include "sylowscope/classify.hpp"
#include "sylowscope/subgroup_ops.hpp"

using namespace sylowscope;

static void BM_StabilizerChainSym(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    PermutationGroup g = symmetric_group(n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_StabilizerChainSym)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

static void BM_StabilizerChainPsl33(benchmark::State& state) {
  const CatalogEntry& e = catalog_entry("psl_3_3");
  const auto gens = e.ambient.group().generators();
  for (auto _ : state) {
    PermutationGroup g(13, gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_StabilizerChainPsl33);

static void BM_AllSubgroups(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  PermutationGroup g = symmetric_group(n);
  for (auto _ : state) {
    Universe uni(g);
    benchmark::DoNotOptimize(all_subgroups(uni).count());
  }
}
BENCHMARK(BM_AllSubgroups)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SylowSubgroup(benchmark::State& state) {
  const PermutationGroup& g = catalog_entry("psl_2_11").ambient.group();
  for (auto _ : state) benchmark::DoNotOptimize(sylow_subgroup(g, 2).order());
}
BENCHMARK(BM_SylowSubgroup);

static void BM_ClassifyGl23Pair(benchmark::State& state) {
  const CatalogEntry& e = catalog_entry("gl2_3");
  for (auto _ : state) {
    PairReport r = classify_pair(e.sub("U"), e.sub("V"));
    benchmark::DoNotOptimize(r.sylow.value);
  }
}
BENCHMARK(BM_ClassifyGl23Pair)->Unit(benchmark::kMillisecond);

static void BM_DegreePattern(benchmark::State& state) {
  const IntegerPolynomial& f = bundled_polynomial("p11");
  const Reduction r = reduce_mod_p(f, 99991);
  for (auto _ : state) benchmark::DoNotOptimize(degree_pattern(r.poly).parts().size());
}
BENCHMARK(BM_DegreePattern);

static void BM_Census(benchmark::State& state) {
  const IntegerPolynomial& f = bundled_polynomial("p7");
  const auto pmax = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census(f, pmax).usable_primes);
}
BENCHMARK(BM_Census)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
