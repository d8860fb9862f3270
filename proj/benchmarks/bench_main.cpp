#include <benchmark/benchmark.h>

#include "dblplane/classify.hpp"
#include "dblplane/plane_model.hpp"

namespace {

using namespace dblplane;

void BM_GroupClosure_A5(benchmark::State& state) {
  Perm c5 = Perm::from_cycles(5, {{0, 1, 2, 3, 4}});
  Perm c3 = Perm::from_cycles(5, {{0, 1, 2}});
  for (auto _ : state) {
    auto g = Group::from_generators(5, {c5, c3});
    benchmark::DoNotOptimize(g.size());
  }
}
BENCHMARK(BM_GroupClosure_A5);

void BM_ConjugacyClasses_A5(benchmark::State& state) {
  auto g = Group::from_generators(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}),
                                      Perm::from_cycles(5, {{0, 1, 2}})});
  for (auto _ : state) {
    auto classes = g.conjugacy_classes();
    benchmark::DoNotOptimize(classes.size());
  }
}
BENCHMARK(BM_ConjugacyClasses_A5);

void BM_FixedPointTable_TypeII(benchmark::State& state) {
  auto sphere = SphericalGroup::catalog(SphereKind::Icosahedral);
  auto deltas = delta_candidates(sphere, 12);
  for (auto _ : state) {
    auto setup = HyperellipticSetup::make(sphere, 6, deltas.front());
    benchmark::DoNotOptimize(setup.lifted_group().size());
  }
}
BENCHMARK(BM_FixedPointTable_TypeII);

void BM_GeneratingVector_TypeId(benchmark::State& state) {
  auto sphere = SphericalGroup::catalog(SphereKind::Octahedral);
  auto deltas = delta_candidates(sphere, 8);
  auto setup = HyperellipticSetup::make(sphere, 4, deltas.front());
  auto chosen = setup.chosen_group();
  auto b = free_involutions(setup);
  std::vector<std::size_t> local;
  for (std::size_t e : b)
    local.push_back(chosen.index_of(setup.lifted_group().element(e)));
  for (auto _ : state) {
    auto vec = find_generating_vector(chosen, local, 6);
    benchmark::DoNotOptimize(vec.has_value());
  }
}
BENCHMARK(BM_GeneratingVector_TypeId);

void BM_LinsysRank_Quintic(benchmark::State& state) {
  for (auto _ : state) {
    auto cert = duval_pg_check(DuValType::II, 42);
    benchmark::DoNotOptimize(cert.pg);
  }
}
BENCHMARK(BM_LinsysRank_Quintic);

void BM_FullClassification(benchmark::State& state) {
  for (auto _ : state) {
    auto report = enumerate_candidates();
    benchmark::DoNotOptimize(report.records.size());
  }
}
BENCHMARK(BM_FullClassification)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
