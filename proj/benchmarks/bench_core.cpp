#include <benchmark/benchmark.h>

#include "fitkit/fitting.hpp"
#include "fitkit/lattice.hpp"
#include "fitkit/named_groups.hpp"
#include "fitkit/perm_core.hpp"
#include "fitkit/tower.hpp"

using namespace fitkit;
namespace g = fitkit::groups;

static void BM_StabChainSymmetric(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  FiniteGroup S = g::symmetric(n);
  for (auto _ : st) {
    StabChain c(n, S.generators());
    benchmark::DoNotOptimize(c.order());
  }
}
BENCHMARK(BM_StabChainSymmetric)->Arg(8)->Arg(16)->Arg(20);

static void BM_GeneralizedFitting(benchmark::State& st) {
  const FiniteGroup groups[] = {g::direct_product(g::symmetric(4), g::symmetric(3)), g::special_linear2(5),
                                g::direct_product(g::alternating(5), g::cyclic(6)), g::symmetric(7)};
  const FiniteGroup& G = groups[st.range(0)];
  for (auto _ : st) benchmark::DoNotOptimize(generalized_fitting(G).fstar.order());
  st.SetLabel("|G| = " + std::to_string(G.order()));
}
BENCHMARK(BM_GeneralizedFitting)->DenseRange(0, 3);

static void BM_BruteForceOracle(benchmark::State& st) {
  FiniteGroup G = g::direct_product(g::symmetric(4), g::symmetric(3));
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_fstar_oracle(G).order());
}
BENCHMARK(BM_BruteForceOracle)->Unit(benchmark::kMillisecond);

static void BM_NormalLattice(benchmark::State& st) {
  FiniteGroup G = g::symmetric(6);
  for (auto _ : st) benchmark::DoNotOptimize(normal_subgroups(G).members.size());
}
BENCHMARK(BM_NormalLattice)->Unit(benchmark::kMillisecond);

static void BM_SubgroupInventory(benchmark::State& st) {
  FiniteGroup G = g::direct_product(g::symmetric(4), g::symmetric(3));
  for (auto _ : st) benchmark::DoNotOptimize(all_subgroups(G).subgroups.size());
}
BENCHMARK(BM_SubgroupInventory)->Unit(benchmark::kMillisecond);

static void BM_BuildTower(benchmark::State& st) {
  const std::uint64_t primes[] = {2, 3, 2, 3};
  const auto levels = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_degenerate_tower(primes, levels).depth());
}
BENCHMARK(BM_BuildTower)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_WitnessLevelTwo(benchmark::State& st) {
  const std::uint64_t primes[] = {2, 3, 2};
  Tower t = build_degenerate_tower(primes, 3);
  const Permutation x = t.level(2).generators().back();
  for (auto _ : st) benchmark::DoNotOptimize(theorem_d_witness(t, {2, x}, 3).has_value());
}
BENCHMARK(BM_WitnessLevelTwo)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
