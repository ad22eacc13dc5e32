#pragma once

#include <vector>

#include "trendlab/backtest.hpp"
#include "trendlab/metrics.hpp"
#include "trendlab/strategy.hpp"

namespace trendlab {

/// Candidate windows are {min, min+step, ...} <= max; candidate pairs
/// require short < long.
struct GridSpec {
    int min_window = 1;
    int max_window = 1;
    int step = 1;
};

void validate(const GridSpec& grid);

/// Default hourly grid: windows 1, 11, ..., 991.
GridSpec default_hourly_grid();
/// Default daily grid: windows 1..50.
GridSpec default_daily_grid();

std::vector<int> grid_windows(const GridSpec& grid);

struct SurfaceCell {
    int short_window = 0;
    int long_window = 0;
    PerformanceMetrics metrics;
};

/// Metric values over the full (short, long) grid for one data slice.
/// Cells are ordered by (long, short) ascending regardless of how many
/// threads evaluated them.
struct SharpeSurface {
    IndicatorKind kind = IndicatorKind::Sma;
    GridSpec grid;
    std::vector<SurfaceCell> cells;
    Timestamp slice_start = 0;
    Timestamp slice_end = 0;
};

struct BestParams {
    int short_window = 0;
    int long_window = 0;
    PerformanceMetrics metrics;
};

/// Evaluate every valid (short, long) pair on the same slice. Indicator
/// series are computed once per window and shared read-only across pairs;
/// windows longer than the slice are omitted. Deterministic for any thread
/// count. Throws Error("empty grid") when no pair survives.
SharpeSurface grid_search(const PriceSeries& prices, IndicatorKind kind,
                          const GridSpec& grid, const BacktestConfig& config,
                          int threads = 0);

/// Cell with the highest Sharpe; ties break toward the smaller long, then
/// smaller short window. Cells with an absent Sharpe never win; throws
/// Error("no tradeable parameters") when every cell is absent.
BestParams best_params(const SharpeSurface& surface);

}  // namespace trendlab
