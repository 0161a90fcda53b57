#include <benchmark/benchmark.h>

#include "hilbzeta/motivic.hpp"
#include "hilbzeta/oracle.hpp"
#include "hilbzeta/strata.hpp"
#include "hilbzeta/tree.hpp"

using namespace hz;

static void BM_EnumerateLevel(benchmark::State& st) {
  auto S = make_semigroup({3, 7});
  const int l = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_level(S, l));
}
BENCHMARK(BM_EnumerateLevel)->Arg(6)->Arg(12)->Arg(18);

static void BM_HilbertClass(benchmark::State& st) {
  auto S = make_semigroup({4, 6, 7});
  const int l = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(hilbert_class(S, l));
}
BENCHMARK(BM_HilbertClass)->Arg(5)->Arg(10);

static void BM_ZetaSeries(benchmark::State& st) {
  auto S = make_semigroup({5, 7});
  for (auto _ : st) benchmark::DoNotOptimize(zeta_series(S, 2 * S->delta() + S->max_generator()));
}
BENCHMARK(BM_ZetaSeries);

static void BM_MotivicGenZeta(benchmark::State& st) {
  auto S = make_semigroup({3, 7});
  const int l = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(motivic_gen_zeta(S, l));
}
BENCHMARK(BM_MotivicGenZeta)->Arg(6)->Arg(12);

static void BM_CountPoints(benchmark::State& st) {
  auto S = make_semigroup({3, 7});
  const auto D = from_generators(S, {6});
  const int q = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(count_points(D, q));
}
BENCHMARK(BM_CountPoints)->Arg(2)->Arg(3);

static void BM_HomflyPQ(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(homfly_pq(4, 9));
}
BENCHMARK(BM_HomflyPQ);
BENCHMARK_MAIN();
