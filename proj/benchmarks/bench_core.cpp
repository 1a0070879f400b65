#include "su11/algebra.hpp"
#include "su11/linops.hpp"
#include "su11/reduction.hpp"
#include "su11/reps.hpp"

#include <benchmark/benchmark.h>

using namespace su11;

static void BM_HermitianEigensystem(benchmark::State& state) {
  const auto q = quadratures(static_cast<std::size_t>(state.range(0))).q;
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigensystem(q));
}
BENCHMARK(BM_HermitianEigensystem)->RangeMultiplier(2)->Range(32, 256);

static void BM_UnitaryExp(benchmark::State& state) {
  const auto q = quadratures(static_cast<std::size_t>(state.range(0))).q;
  for (auto _ : state) benchmark::DoNotOptimize(unitary_exp(q, 1));
}
BENCHMARK(BM_UnitaryExp)->RangeMultiplier(2)->Range(32, 256);

static void BM_CircleCommutators(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = saf_realization({0.5, 1.0}, BasisSpec::circle(-static_cast<double>(n / 2), n));
  for (auto _ : state) benchmark::DoNotOptimize(check_commutators(t, {}));
}
BENCHMARK(BM_CircleCommutators)->RangeMultiplier(2)->Range(32, 256);

static void BM_BoseFormBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(saf_bose_form({0.5, 1.0}, n, BoseForm::form1));
}
BENCHMARK(BM_BoseFormBuild)->RangeMultiplier(2)->Range(32, 128);

static void BM_TwoModeCasimir(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = two_mode(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(check_casimir(t, {}));
}
BENCHMARK(BM_TwoModeCasimir)->Arg(8)->Arg(16)->Arg(24);

static void BM_VerifyReduction(benchmark::State& state) {
  const ModelParams params(1.0, 0.1, 0.3);
  const auto pairs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_reduction(params, pairs, 1e-9));
}
BENCHMARK(BM_VerifyReduction)->Arg(8)->Arg(16)->Arg(24);
BENCHMARK_MAIN();
