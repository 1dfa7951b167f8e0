#include "qmrc/brackets.hpp"
#include "qmrc/coeffsolver.hpp"
#include "qmrc/qseries.hpp"
#include "qmrc/spaces.hpp"
#include "qmrc/wz.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qmrc;

namespace {

GradedPoly dense_poly(int weight, int depth_max, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  GradedPoly p;
  for (const GradedPoly& m : monomial_basis(weight, depth_max))
    p.add_term(m.terms().begin()->first, Rational(num(rng), den(rng)));
  return p;
}

void BM_DeltaExpansion(benchmark::State& state) {
  const long order = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(delta(order));
}
BENCHMARK(BM_DeltaExpansion)->Arg(50)->Arg(100)->Arg(200);

void BM_Bracket(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuasiForm f = QuasiForm::from_poly(dense_poly(12, 6, 1));
  const QuasiForm g = QuasiForm::from_poly(dense_poly(12, 6, 2));
  const BracketParams params(n, 12, 6, 12, 6);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(f, g, params));
}
BENCHMARK(BM_Bracket)->Arg(1)->Arg(3)->Arg(5);

void BM_KernelSolve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_and_confirm(12, 12, 6, 6, 5));
}
BENCHMARK(BM_KernelSolve);

void BM_Decompose(benchmark::State& state) {
  const QuasiForm f = QuasiForm::from_poly(dense_poly(24, 12, 3));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(f));
}
BENCHMARK(BM_Decompose);

void BM_ToQSeries(benchmark::State& state) {
  const GradedPoly p = dense_poly(12, 6, 4);
  const long order = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(to_qseries(p, order));
}
BENCHMARK(BM_ToQSeries)->Arg(25)->Arg(50);

void BM_Certificate(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(certificate_check(n));
}
BENCHMARK(BM_Certificate)->Arg(10)->Arg(40);

void BM_SpanMembership(benchmark::State& state) {
  const QuasiForm h = bracket(QuasiForm::E2(), QuasiForm::E2(), 6);
  const SpaceSpec spec({Cusp{16}, DerivedCusp{2, 12}});
  for (auto _ : state) {
    const SpanSolver solver(spec.generators());
    benchmark::DoNotOptimize(solver.contains(h.poly()));
  }
}
BENCHMARK(BM_SpanMembership);

}  // namespace

BENCHMARK_MAIN();
