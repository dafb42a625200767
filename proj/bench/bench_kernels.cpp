#include <benchmark/benchmark.h>

#include "qrw/filters.hpp"
#include "qrw/propositions.hpp"
#include "qrw/search.hpp"

namespace {

void BM_FiltersReference(benchmark::State& state) {
  const auto s = qrw::gen_lukasiewicz(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qrw::enumerate_filters_reference(s, qrw::FilterKind::kImplicative));
  }
}
BENCHMARK(BM_FiltersReference)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_FiltersKernel(benchmark::State& state) {
  const auto s = qrw::gen_lukasiewicz(static_cast<std::size_t>(state.range(0)));
  qrw::EnumerationOptions o;
  o.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qrw::enumerate_filters(s, qrw::FilterKind::kImplicative, o));
  }
}
BENCHMARK(BM_FiltersKernel)
    ->Args({8, 1})
    ->Args({12, 1})
    ->Args({12, 0})
    ->Args({16, 1})
    ->Args({16, 0})
    ->Unit(benchmark::kMillisecond);

void BM_ImplicativeIsFilterScan(benchmark::State& state) {
  const auto s = qrw::gen_lukasiewicz(static_cast<std::size_t>(state.range(0)));
  qrw::EnumerationOptions o;
  o.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(qrw::check_implicative_is_filter(s, o));
}
BENCHMARK(BM_ImplicativeIsFilterScan)
    ->Args({14, 1})
    ->Args({14, 0})
    ->Unit(benchmark::kMillisecond);

void BM_SearchSerial(benchmark::State& state) {
  qrw::SearchConfig cfg;
  cfg.order = static_cast<std::size_t>(state.range(0));
  cfg.strict_link = true;
  for (auto _ : state) benchmark::DoNotOptimize(qrw::enumerate_models_serial(cfg));
}
BENCHMARK(BM_SearchSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SearchParallel(benchmark::State& state) {
  qrw::SearchConfig cfg;
  cfg.order = static_cast<std::size_t>(state.range(0));
  cfg.strict_link = true;
  cfg.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(qrw::enumerate_models(cfg));
}
BENCHMARK(BM_SearchParallel)->Args({4, 0})->Args({5, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
