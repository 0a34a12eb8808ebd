#include <benchmark/benchmark.h>

#include "partineq/counting.hpp"
#include "partineq/injections.hpp"
#include "partineq/pairing.hpp"
#include "partineq/qseries.hpp"

using namespace partineq;

namespace {

void BM_count_series(benchmark::State& state) {
  const ClassParams c{3, 1, {2, 3}, ClassKind::I};
  const auto nmax = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    CountTable t = count_series(c, nmax);
    benchmark::DoNotOptimize(t.counts.back());
  }
}
BENCHMARK(BM_count_series)->Arg(1000)->Arg(10000)->Arg(34292);

void BM_count_series_powers(benchmark::State& state) {
  const ClassParams c{30, 1, {17, 25}, ClassKind::DV};
  const auto nmax = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    CountTable t = count_series(c, nmax);
    benchmark::DoNotOptimize(t.counts.back());
  }
}
BENCHMARK(BM_count_series_powers)->Arg(1000)->Arg(10000);

void BM_psi_round_trip(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  Int v = 1;
  for (auto _ : state) {
    const std::vector<Int> m = psi0_unrank(v, t);
    benchmark::DoNotOptimize(psi0_rank(m));
    if (++v > 100000) v = 1;
  }
}
BENCHMARK(BM_psi_round_trip)->Arg(2)->Arg(4);

void BM_t1_apply_recover(benchmark::State& state) {
  const ClassParams c{3, 1, {2, 3}, ClassKind::I};
  const Partition p =
      Partition::from_pairs({{Int(1), Int(state.range(0))}});
  for (auto _ : state) {
    const MapResult r = apply_t1(p, c);
    benchmark::DoNotOptimize(recover_t1(r.image, c));
  }
}
BENCHMARK(BM_t1_apply_recover)->Arg(28)->Arg(33792);

void BM_h_series(benchmark::State& state) {
  const auto nmax = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Series h = h_series(3, 1, {2, 3}, nmax);
    benchmark::DoNotOptimize(h[nmax]);
  }
}
BENCHMARK(BM_h_series)->Arg(1000)->Arg(34292);

}  // namespace

BENCHMARK_MAIN();
