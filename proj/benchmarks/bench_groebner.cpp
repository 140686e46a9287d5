#include <benchmark/benchmark.h>

#include "apolar/apolarity.hpp"
#include "apolar/waring.hpp"

using namespace apolar;

static void BM_Annihilator(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  VarAlphabet a{2, n, 0};
  Polynomial f = sum_of_squares(a, false, Side::kForm) * sum_of_squares(a, true, Side::kForm);
  for (auto _ : state) benchmark::DoNotOptimize(annihilator(f));
}
BENCHMARK(BM_Annihilator)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_LexBasisM2(benchmark::State& state) {
  Ideal i = construct_minimal_apolar(FamilySpec::m2(static_cast<int>(state.range(0))));
  MonomialOrder lex = MonomialOrder::lex(i.alphabet.size());
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(i, lex));
}
BENCHMARK(BM_LexBasisM2)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_ExtractM1(benchmark::State& state) {
  FamilySpec s = FamilySpec::m1(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(family_points(s, PointMode::kApprox));
}
BENCHMARK(BM_ExtractM1)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_EcompGeneral(benchmark::State& state) {
  FamilySpec s = FamilySpec::general(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(ecomp_lower_bound(s));
}
BENCHMARK(BM_EcompGeneral)->Args({3, 3})->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_RankBounds(benchmark::State& state) {
  FamilySpec s = FamilySpec::monomial_powersum({2, 2}, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank_bounds(s));
}
BENCHMARK(BM_RankBounds)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
