#include <benchmark/benchmark.h>

#include "hypermod/bilateral.hpp"
#include "hypermod/lseries.hpp"
#include "hypermod/recon.hpp"

using namespace hypermod;

namespace {

void BM_CriticalLValue(benchmark::State& state) {
  auto bits = static_cast<mpfr_prec_t>(state.range(0));
  PrecisionGuard guard(bits);
  ModularFormNumeric form = numeric_form("8.4-prototype", bits);
  for (auto _ : state) benchmark::DoNotOptimize(critical_l_value(form, 2));
}
BENCHMARK(BM_CriticalLValue)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_FrobeniusBasisAtOne(benchmark::State& state) {
  auto bits = static_cast<mpfr_prec_t>(state.range(0));
  PrecisionGuard guard(bits);
  std::vector<BigRational> upper(4, BigRational(BigInt(1), BigInt(2)));
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_basis(upper, Complex(1L), 4, bits));
}
BENCHMARK(BM_FrobeniusBasisAtOne)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ReconstructRational(benchmark::State& state) {
  PrecisionGuard guard(256);
  Real x = Real(BigRational(BigInt(-5), BigInt(12032)));
  Real err(1e-60);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_rational(x, err, BigInt(1000000)));
}
BENCHMARK(BM_ReconstructRational);

}  // namespace

BENCHMARK_MAIN();
