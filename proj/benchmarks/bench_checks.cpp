#include <benchmark/benchmark.h>

#include "qchu/generators.hpp"
#include "qchu/measurement.hpp"
#include "qchu/ortho.hpp"

using namespace qchu;

static void BM_ProjectiveDomain_Boolean(benchmark::State& state) {
  const StateSpace S = gen_boolean(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto checks = S.poset.check_projective_domain();
    benchmark::DoNotOptimize(checks);
  }
}
BENCHMARK(BM_ProjectiveDomain_Boolean)->DenseRange(2, 5);

static void BM_ProjectiveDomain_MO(benchmark::State& state) {
  const StateSpace S = gen_mo(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto checks = S.poset.check_projective_domain();
    benchmark::DoNotOptimize(checks);
  }
}
BENCHMARK(BM_ProjectiveDomain_MO)->DenseRange(2, 8, 2);

static void BM_StarLaws(benchmark::State& state) {
  const StateSpace S = gen_mo(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto checks = check_star_laws(S, *S.scheme);
    benchmark::DoNotOptimize(checks);
  }
}
BENCHMARK(BM_StarLaws)->DenseRange(2, 6, 2);

static void BM_ClosedSetLattice(benchmark::State& state) {
  const StateSpace S = gen_mo(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto lattice = build_closed_set_lattice(S, *S.scheme);
    benchmark::DoNotOptimize(lattice);
  }
}
BENCHMARK(BM_ClosedSetLattice)->DenseRange(2, 8, 2);

static void BM_HilbertChecks(benchmark::State& state) {
  const StateSpace S = gen_mo(static_cast<int>(state.range(0)));
  const ClosedSetLattice L = build_closed_set_lattice(S, *S.scheme);
  for (auto _ : state) {
    auto checks = check_hilbert_lattice(L);
    benchmark::DoNotOptimize(checks);
  }
}
BENCHMARK(BM_HilbertChecks)->DenseRange(2, 6, 2);

static void BM_SaturateQuotient(benchmark::State& state) {
  const ChuSpace c = random_chu(11, static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    auto q = quotient(saturate(c));
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_SaturateQuotient)->DenseRange(3, 6);

static void BM_ThetaMap(benchmark::State& state) {
  const StateSpace S = gen_boolean(static_cast<int>(state.range(0)));
  const PropertyRecord l = make_property(S, S.poset.index("1"),
                                         S.scheme->pairs[S.scheme->pair_with_first(
                                             S.poset.index("1"))].second);
  for (auto _ : state) {
    auto m = theta_map(S, l);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_ThetaMap)->DenseRange(3, 5);

BENCHMARK_MAIN();
