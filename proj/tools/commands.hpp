#pragma once

#include <optional>
#include <string>

#include "reports.hpp"
#include "trendlab/marketdata.hpp"
#include "trendlab/optimizer.hpp"

namespace trendlab::cli {

/// One input series: where it lives and how to turn it into a PriceSeries.
struct DataOptions {
    std::string path;                // "-" reads standard input
    std::string format = "ticks";    // ticks | ohlc
    std::string resample = "";       // 1h | 1d (ticks default to 1h)
    std::string from;                // ISO date, optional
    std::string to;                  // ISO date, optional
};

struct CommonOptions {
    std::string out_dir = ".";
    int threads = 0;  // 0 = available parallelism
    bool entry_on_start = true;
    double initial_cash = 10'000.0;
};

struct StrategyOptions {
    std::string kind = "sma";
    int short_window = 0;
    int long_window = 0;
};

struct GridOptions {
    std::string grid;  // "min,max,step"; empty = resolution default
};

PriceSeries load_series(const DataOptions& data, RunManifest& manifest);
GridSpec resolve_grid(const GridOptions& options, Resolution resolution);
BacktestConfig backtest_config(const CommonOptions& common);

int cmd_ingest(const DataOptions& data, const CommonOptions& common,
               RunManifest& manifest);
int cmd_backtest(const DataOptions& data, const CommonOptions& common,
                 const StrategyOptions& strategy, RunManifest& manifest);
int cmd_grid(const DataOptions& data, const CommonOptions& common,
             const std::string& kind, const GridOptions& grid, RunManifest& manifest);
int cmd_walkforward(const DataOptions& data, const CommonOptions& common,
                    const std::string& kind, const GridOptions& grid,
                    const std::string& annualization, RunManifest& manifest);
int cmd_correlate(const DataOptions& data_a, const DataOptions& data_b,
                  const CommonOptions& common, int window,
                  const std::optional<StrategyOptions>& strategy,
                  RunManifest& manifest);

}  // namespace trendlab::cli
