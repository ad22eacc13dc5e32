#include "trendlab/optimizer.hpp"

#include <utility>

#include "trendlab/error.hpp"
#include "trendlab/parallel.hpp"

namespace trendlab {

void validate(const GridSpec& grid) {
    if (grid.min_window < 1) throw Error("grid min must be >= 1");
    if (grid.step < 1) throw Error("grid step must be >= 1");
    if (grid.max_window < grid.min_window) throw Error("grid max must be >= min");
}

GridSpec default_hourly_grid() { return GridSpec{1, 991, 10}; }

GridSpec default_daily_grid() { return GridSpec{1, 50, 1}; }

std::vector<int> grid_windows(const GridSpec& grid) {
    validate(grid);
    std::vector<int> windows;
    for (int w = grid.min_window; w <= grid.max_window; w += grid.step) {
        windows.push_back(w);
    }
    return windows;
}

namespace {

std::size_t indicator_warmup(IndicatorKind kind, int window) {
    return kind == IndicatorKind::Sma ? static_cast<std::size_t>(window) - 1 : 0;
}

std::vector<double> compute_window_values(IndicatorKind kind,
                                          std::span<const double> closes, int window) {
    switch (kind) {
        case IndicatorKind::Sma: return sma_values(closes, window);
        case IndicatorKind::Ema: return ema_values(closes, window);
        case IndicatorKind::Dema: return dema_values(closes, window);
    }
    throw Error("unknown indicator kind");
}

}  // namespace

SharpeSurface grid_search(const PriceSeries& prices, IndicatorKind kind,
                          const GridSpec& grid, const BacktestConfig& config,
                          int threads) {
    std::vector<int> windows = grid_windows(grid);
    // Windows longer than the slice are dropped rather than reported.
    std::erase_if(windows,
                  [&](int w) { return static_cast<std::size_t>(w) > prices.size(); });

    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // indices into windows
    for (std::size_t li = 0; li < windows.size(); ++li) {
        for (std::size_t si = 0; si < li; ++si) {
            pairs.emplace_back(si, li);  // ordered by (long, short) ascending
        }
    }
    if (pairs.empty()) throw Error("empty grid");

    const std::vector<double> closes = prices.closes();

    // Shared cache: one indicator series per window, built up front and
    // read-only during the pair fan-out.
    std::vector<std::vector<double>> cache(windows.size());
    parallel_for(windows.size(), threads, [&](std::size_t i) {
        cache[i] = compute_window_values(kind, closes, windows[i]);
    });

    SharpeSurface surface;
    surface.kind = kind;
    surface.grid = grid;
    surface.slice_start = prices.start();
    surface.slice_end = prices.end_exclusive();
    surface.cells.resize(pairs.size());

    const double bpy = bars_per_year(prices.resolution);
    parallel_for(pairs.size(), threads, [&](std::size_t k) {
        const auto [si, li] = pairs[k];
        const SignalSeries signals = crossover_from_indicators(
            cache[si], indicator_warmup(kind, windows[si]), cache[li],
            indicator_warmup(kind, windows[li]), config.entry_on_start);
        const BacktestResult result = run_backtest(prices, signals, config);
        surface.cells[k] =
            SurfaceCell{windows[si], windows[li], compute_metrics(result, bpy)};
    });
    return surface;
}

BestParams best_params(const SharpeSurface& surface) {
    const SurfaceCell* best = nullptr;
    for (const SurfaceCell& cell : surface.cells) {
        if (!cell.metrics.sharpe) continue;
        // Cells are ordered by (long, short) ascending, so a strict
        // comparison resolves ties toward the smaller pair.
        if (!best || *cell.metrics.sharpe > *best->metrics.sharpe) best = &cell;
    }
    if (!best) throw Error("no tradeable parameters");
    return BestParams{best->short_window, best->long_window, best->metrics};
}

}  // namespace trendlab
