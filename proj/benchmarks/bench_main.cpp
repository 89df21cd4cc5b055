#include <benchmark/benchmark.h>

#include "orbitkit/classify.hpp"
#include "orbitkit/dualpair.hpp"
#include "orbitkit/jordan.hpp"
#include "orbitkit/poisson.hpp"
#include "orbitkit/triples.hpp"

using namespace orbitkit;

namespace {

AlgebraPtr algebra_for(int index) {
  switch (index) {
    case 0: return make_algebra(Family::sp, {4});
    case 1: return make_algebra(Family::u, {3, 3});
    case 2: return make_algebra(Family::sostar, {4});
    default: return make_algebra(Family::so2q, {6});
  }
}

void BM_OctonionProduct(benchmark::State& state) {
  Rng rng(1);
  Octonion<double> a{}, b{};
  for (auto& x : a) x = rng.normal();
  for (auto& x : b) x = rng.normal();
  for (auto _ : state) {
    a = oct_mul(a, b);
    benchmark::DoNotOptimize(a);
    a[0] *= 0.5;
  }
}
BENCHMARK(BM_OctonionProduct);

void BM_ClassifyConjugate(benchmark::State& state) {
  const auto g = algebra_for(static_cast<int>(state.range(0)));
  const LieElement x = random_conjugate(orbit_rep(g, g->split_rank, 0), 3, 7);
  state.SetLabel(g->name());
  for (auto _ : state) benchmark::DoNotOptimize(classify_nilpotent(x));
}
BENCHMARK(BM_ClassifyConjugate)->DenseRange(0, 3);

void BM_ClosureStratum(benchmark::State& state) {
  const auto g = algebra_for(static_cast<int>(state.range(0)));
  const LieElement x = random_conjugate(orbit_rep(g, 1, 0), 3, 8);
  state.SetLabel(g->name());
  for (auto _ : state) benchmark::DoNotOptimize(closure_stratum(x));
}
BENCHMARK(BM_ClosureStratum)->DenseRange(0, 3);

void BM_PoissonContext(benchmark::State& state) {
  const auto g = algebra_for(static_cast<int>(state.range(0)));
  state.SetLabel(g->name());
  for (auto _ : state) benchmark::DoNotOptimize(make_poisson_context(g));
}
BENCHMARK(BM_PoissonContext)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ZeroLevelReduction(benchmark::State& state) {
  const DualPairConfig cfg = make_dual_pair(DualPairCase::o_sp, static_cast<int>(state.range(0)), 0, {3});
  for (auto _ : state) benchmark::DoNotOptimize(reduce_and_classify(cfg, 100, 9));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_ZeroLevelReduction)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_InvariantQuadratics(benchmark::State& state) {
  const DualPairConfig cfg = make_dual_pair(DualPairCase::o_sp, 2, 0, {2});
  for (auto _ : state) benchmark::DoNotOptimize(invariant_quadratics_dim(cfg));
}
BENCHMARK(BM_InvariantQuadratics)->Unit(benchmark::kMillisecond);

void BM_GenericNorm(benchmark::State& state) {
  Rng rng(10);
  AlbertElement a;
  for (int i = 0; i < 3; ++i) {
    a.alpha[i] = cplx(rng.normal(), rng.normal());
    for (auto& c : a.a[i]) c = cplx(rng.normal(), rng.normal());
  }
  for (auto _ : state) benchmark::DoNotOptimize(generic_norm(a));
}
BENCHMARK(BM_GenericNorm);

void BM_AlbertRank(benchmark::State& state) {
  const AlbertElement a = AlbertElement::diag(1.0, 1.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(albert_rank(a));
}
BENCHMARK(BM_AlbertRank);

void BM_JordanRankClassical(benchmark::State& state) {
  const auto g = algebra_for(static_cast<int>(state.range(0)));
  const PPlusElement w = ks_element(*g, g->split_rank);
  state.SetLabel(g->name());
  for (auto _ : state) benchmark::DoNotOptimize(jordan_rank_classical(*g, w));
}
BENCHMARK(BM_JordanRankClassical)->DenseRange(0, 3);

}  // namespace
BENCHMARK_MAIN();
