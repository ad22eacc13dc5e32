#include <benchmark/benchmark.h>

#include "bench_support.hpp"
#include "trendlab/indicators.hpp"

namespace {

const trendlab::PriceSeries& series_72k() {
    static const trendlab::PriceSeries series = trendlab::bench::synthetic_hourly(72'000);
    return series;
}

void BM_Sma(benchmark::State& state) {
    const auto closes = series_72k().closes();
    for (auto _ : state) {
        auto values = trendlab::sma_values(closes, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(values);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(closes.size()));
}
BENCHMARK(BM_Sma)->Arg(11)->Arg(141)->Arg(991);

void BM_Ema(benchmark::State& state) {
    const auto closes = series_72k().closes();
    for (auto _ : state) {
        auto values = trendlab::ema_values(closes, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(values);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(closes.size()));
}
BENCHMARK(BM_Ema)->Arg(141);

void BM_Dema(benchmark::State& state) {
    const auto closes = series_72k().closes();
    for (auto _ : state) {
        auto values = trendlab::dema_values(closes, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(values);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(closes.size()));
}
BENCHMARK(BM_Dema)->Arg(141);

}  // namespace
