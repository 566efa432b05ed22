#include <benchmark/benchmark.h>

#include "chowring/graded_ideal.hpp"
#include "chowring/localize.hpp"
#include "chowring/pipeline.hpp"
#include "chowring/symchern.hpp"

using namespace chowring;

static void BM_PolynomialMultiply(benchmark::State& state) {
  Polynomial a(1);
  for (int i = 1; i <= state.range(0); ++i) a *= Polynomial(Variable::hyperplane()) + Polynomial(Variable::root(i));
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_PolynomialMultiply)->DenseRange(3, 6);

static void BM_SymmetricToChern(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Polynomial p = total_chern_poly(build_roots(n, {BaseModule::kWedge2Dual, 0}), Variable::hyperplane());
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_to_chern(p, n));
}
BENCHMARK(BM_SymmetricToChern)->DenseRange(3, 5);

static void BM_VeronesePushforward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(veronese_pushforward(n, 0));
}
BENCHMARK(BM_VeronesePushforward)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_ClosedFormPushforward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_pushforward(n, 0));
}
BENCHMARK(BM_ClosedFormPushforward)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_GradedPiece(benchmark::State& state) {
  const int n = 5;
  const GradedIdeal ideal(chern_variables(n), reduced_quadrics_family(n, 1));
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graded_piece(ideal, d));
}
BENCHMARK(BM_GradedPiece)->DenseRange(15, 25, 5)->Unit(benchmark::kMillisecond);

static void BM_ReducedQuadrics(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_quadrics(n, 1));
}
BENCHMARK(BM_ReducedQuadrics)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
