// Serial reference vs OpenMP kernels on the theorem families.
#include "ternmin/code.hpp"
#include "ternmin/kernels.hpp"
#include "ternmin/minimality.hpp"
#include "ternmin/walsh.hpp"
#include "ternmin/weight_class.hpp"

#include <benchmark/benchmark.h>

using namespace ternmin;

namespace {

std::vector<std::uint8_t> raw_table(int m) {
  const auto t = WeightClassFunction::make(Family::gbar, m, 2, {}, RangeCheck::unchecked).table();
  std::vector<std::uint8_t> out;
  for (F3 v : t.values) out.push_back(v.value());
  return out;
}

Backend backend_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Backend::serial : Backend::openmp;
}

void BM_ExponentHistograms(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto table = raw_table(m);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::exponent_histograms(table, m, backend_of(state)));
  state.SetLabel(backend_of(state) == Backend::serial ? "serial" : "openmp");
}

void BM_SymbolCounts(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto table = raw_table(m);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::symbol_counts(table, m, backend_of(state)));
  state.SetLabel(backend_of(state) == Backend::serial ? "serial" : "openmp");
}

void BM_CoverScan(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto table = WeightClassFunction::make(Family::g, m, 2, {}, RangeCheck::unchecked).table();
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal_brute(table, m, backend_of(state)));
  state.SetLabel(backend_of(state) == Backend::serial ? "serial" : "openmp");
}

void BM_SpectralPairScan(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto table = WeightClassFunction::make(Family::gbar, m, 2, {}, RangeCheck::unchecked).table();
  const auto re2 = walsh_re2_spectrum(table, Backend::openmp, m);
  const std::int64_t target = 2 * static_cast<std::int64_t>(space_size(m));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::first_spectral_violation(re2, m, target, backend_of(state)));
  }
  state.SetLabel(backend_of(state) == Backend::serial ? "serial" : "openmp");
}

}  // namespace

BENCHMARK(BM_ExponentHistograms)->ArgsProduct({{5, 6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymbolCounts)->ArgsProduct({{5, 6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverScan)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectralPairScan)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
