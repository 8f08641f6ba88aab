#include <benchmark/benchmark.h>

#include "hypermod/ellcurve.hpp"
#include "hypermod/etaforms.hpp"
#include "hypermod/trunchyper.hpp"

using namespace hypermod;

namespace {

BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }

void BM_TruncatedSumMod(benchmark::State& state) {
  long p = state.range(0);
  HyperParams hp = HyperParams::with_unit_lower({q(1, 3), q(2, 3), q(1, 4), q(3, 4)}, q(1));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_sum_mod(hp, p, p, 3));
}
BENCHMARK(BM_TruncatedSumMod)->Arg(101)->Arg(1009)->Arg(10007);

void BM_TruncatedSumExact(benchmark::State& state) {
  HyperParams hp = HyperParams::with_unit_lower(std::vector<BigRational>(4, q(1, 2)), q(1));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_sum(hp, state.range(0)));
}
BENCHMARK(BM_TruncatedSumExact)->Arg(101)->Arg(503);

void BM_EtaExpand(benchmark::State& state) {
  const EtaCombination& form = *find_form("25.4").eta;
  for (auto _ : state) benchmark::DoNotOptimize(combo_expand(form, static_cast<size_t>(state.range(0))));
}
BENCHMARK(BM_EtaExpand)->Arg(1000)->Arg(10000);

void BM_CountPoints(benchmark::State& state) {
  CurveFamily fam{CurveKind::W4, q(-3, 7)};
  Cubic model = fam.model();
  long p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(count_points(model, p));
}
BENCHMARK(BM_CountPoints)->Arg(101)->Arg(10007)->Arg(100003);

}  // namespace

BENCHMARK_MAIN();
