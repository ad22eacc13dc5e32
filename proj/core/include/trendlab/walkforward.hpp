#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trendlab/optimizer.hpp"

namespace trendlab {

/// Half-open [start, end) timestamp range.
struct PeriodBounds {
    Timestamp start = 0;
    Timestamp end = 0;
};

struct FittedParams {
    int short_window = 0;
    int long_window = 0;
};

/// One train/test pair. `skipped_reason` is non-empty when the period
/// contributed no trades; its return is then treated as 0 (flat).
struct WalkForwardPeriod {
    PeriodBounds train;
    PeriodBounds test;
    std::optional<FittedParams> fitted;
    std::optional<PerformanceMetrics> test_metrics;
    std::string skipped_reason;

    bool skipped() const { return !skipped_reason.empty(); }
    double period_return() const {
        return skipped() || !test_metrics ? 0.0 : test_metrics->total_return;
    }
};

struct WalkForwardReport {
    std::vector<WalkForwardPeriod> periods;
    double combined_total_return = 0.0;
    double combined_annualized_geometric = 0.0;
    double combined_annualized_arithmetic = 0.0;
};

/// Consecutive non-overlapping windows of `period_length` seconds anchored
/// at the series start; pair k trains on window k and tests on window k+1.
/// A trailing partial window shorter than 25% of the period is dropped,
/// otherwise kept as a short test window. Throws Error("insufficient
/// history") when the series spans fewer than two periods.
std::vector<std::pair<PeriodBounds, PeriodBounds>> partition_periods(
    const PriceSeries& prices, std::int64_t period_length = kSecondsPerYear);

/// Fit (short, long) by Sharpe on each train window, apply unchanged to the
/// following test window, and chain test returns multiplicatively. Periods
/// whose train surface has no defined cell, or whose fitted parameters
/// trade zero times on test, are recorded as skipped with reason
/// "no trades" and a flat 0% return.
WalkForwardReport walk_forward(const PriceSeries& prices, IndicatorKind kind,
                               const GridSpec& grid, const BacktestConfig& config,
                               std::int64_t period_length = kSecondsPerYear,
                               int threads = 0);

}  // namespace trendlab
