#include "trendlab/walkforward.hpp"

#include <cmath>

#include "trendlab/error.hpp"

namespace trendlab {

std::vector<std::pair<PeriodBounds, PeriodBounds>> partition_periods(
    const PriceSeries& prices, std::int64_t period_length) {
    if (period_length <= 0) throw Error("period length must be positive");
    if (prices.empty()) throw Error("insufficient history");

    const Timestamp origin = prices.start();
    const std::int64_t span = prices.end_exclusive() - origin;
    if (span < 2 * period_length) throw Error("insufficient history");

    const std::int64_t full = span / period_length;
    const std::int64_t remainder = span - full * period_length;

    std::vector<PeriodBounds> windows;
    for (std::int64_t k = 0; k < full; ++k) {
        windows.push_back(PeriodBounds{origin + k * period_length,
                                       origin + (k + 1) * period_length});
    }
    // A trailing sliver under a quarter period carries too little data to
    // score; anything longer stays as a short test window.
    if (remainder * 4 >= period_length) {
        windows.push_back(PeriodBounds{origin + full * period_length, origin + span});
    }

    std::vector<std::pair<PeriodBounds, PeriodBounds>> pairs;
    for (std::size_t k = 0; k + 1 < windows.size(); ++k) {
        pairs.emplace_back(windows[k], windows[k + 1]);
    }
    return pairs;
}

WalkForwardReport walk_forward(const PriceSeries& prices, IndicatorKind kind,
                               const GridSpec& grid, const BacktestConfig& config,
                               std::int64_t period_length, int threads) {
    const auto pairs = partition_periods(prices, period_length);
    const double bpy = bars_per_year(prices.resolution);

    WalkForwardReport report;
    report.periods.reserve(pairs.size());

    for (const auto& [train_bounds, test_bounds] : pairs) {
        WalkForwardPeriod period;
        period.train = train_bounds;
        period.test = test_bounds;

        try {
            const PriceSeries train = slice(prices, train_bounds.start, train_bounds.end);
            const SharpeSurface surface = grid_search(train, kind, grid, config, threads);
            const BestParams fit = best_params(surface);
            period.fitted = FittedParams{fit.short_window, fit.long_window};

            const PriceSeries test = slice(prices, test_bounds.start, test_bounds.end);
            const StrategySpec spec{kind, fit.short_window, fit.long_window};
            const SignalSeries signals =
                crossover_signals(test, spec, config.entry_on_start);
            const BacktestResult result = run_backtest(test, signals, config);
            period.test_metrics = compute_metrics(result, bpy);
            if (result.trades.empty()) period.skipped_reason = "no trades";
        } catch (const Error&) {
            // Degenerate period: nothing tradeable on train, or the fitted
            // windows do not fit the test slice. Capital stays in cash.
            period.skipped_reason = "no trades";
        }
        report.periods.push_back(std::move(period));
    }

    double growth = 1.0;
    double return_sum = 0.0;
    std::int64_t test_seconds = 0;
    for (const WalkForwardPeriod& period : report.periods) {
        growth *= 1.0 + period.period_return();
        return_sum += period.period_return();
        test_seconds += period.test.end - period.test.start;
    }
    report.combined_total_return = growth - 1.0;
    const double years = static_cast<double>(test_seconds) / kSecondsPerYear;
    report.combined_annualized_geometric = std::pow(growth, 1.0 / years) - 1.0;
    report.combined_annualized_arithmetic =
        return_sum / static_cast<double>(report.periods.size());
    return report;
}

}  // namespace trendlab
