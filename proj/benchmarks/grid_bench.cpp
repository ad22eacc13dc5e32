#include <benchmark/benchmark.h>

#include "bench_support.hpp"
#include "trendlab/optimizer.hpp"
#include "trendlab/strategy.hpp"

namespace {

void BM_CrossoverBacktest(benchmark::State& state) {
    const trendlab::PriceSeries series = trendlab::bench::synthetic_hourly(72'000);
    const trendlab::StrategySpec spec{trendlab::IndicatorKind::Sma, 141, 781};
    const trendlab::BacktestConfig config{};
    for (auto _ : state) {
        const auto signals = trendlab::crossover_signals(series, spec);
        auto result = trendlab::run_backtest(series, signals, config);
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(series.size()));
}
BENCHMARK(BM_CrossoverBacktest);

// One year of hourly bars across grid densities; threads on the x axis.
void BM_GridSearch(benchmark::State& state) {
    const trendlab::PriceSeries series = trendlab::bench::synthetic_hourly(8'760);
    const trendlab::GridSpec grid{1, 991, static_cast<int>(state.range(0))};
    const trendlab::BacktestConfig config{};
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto surface =
            trendlab::grid_search(series, trendlab::IndicatorKind::Sma, grid, config, threads);
        benchmark::DoNotOptimize(surface);
    }
}
BENCHMARK(BM_GridSearch)
    ->Args({50, 1})
    ->Args({50, 0})
    ->Args({10, 1})
    ->Args({10, 0})
    ->Unit(benchmark::kMillisecond);

}  // namespace
