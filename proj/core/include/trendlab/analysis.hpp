#pragma once

#include <cstdint>
#include <vector>

#include "trendlab/backtest.hpp"
#include "trendlab/marketdata.hpp"

namespace trendlab {

/// Timestamped values at one resolution; the common shape shared by price
/// series and equity curves when pairing assets.
struct ValueSeries {
    Resolution resolution = Resolution::Daily;
    std::vector<Timestamp> timestamps;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

ValueSeries to_value_series(const PriceSeries& prices);
ValueSeries equity_series(const PriceSeries& prices, const BacktestResult& result);

/// Daily simple returns of two series on their common UTC-date grid. Hourly
/// inputs are reduced to daily by the last bar of each UTC day; dates
/// missing from either side are dropped (intersection, no fill).
struct PairedReturns {
    std::vector<std::int64_t> days;  // UTC day index of each return's end date
    std::vector<double> a;
    std::vector<double> b;

    std::size_t size() const { return a.size(); }
};

PairedReturns align_daily(const ValueSeries& a, const ValueSeries& b);

/// Trailing-window Pearson correlations; undefined (NaN) for the first
/// window-1 entries and wherever either window has zero variance.
struct CorrelationSeries {
    int window = 0;
    std::vector<std::int64_t> days;
    std::vector<double> values;  // NaN = undefined

    std::size_t size() const { return values.size(); }
};

CorrelationSeries rolling_correlation(const PairedReturns& pairs, int window);

struct CorrelationTest {
    double r = 0.0;
    double t_statistic = 0.0;
    double p_value = 1.0;
    std::size_t n = 0;
};

/// Full-period Pearson r with t = r*sqrt((n-2)/(1-r^2)) and the two-sided
/// p-value from Student's t with n-2 degrees of freedom. |r| = 1 reports an
/// infinite t and p = 0.
CorrelationTest correlation_significance(const PairedReturns& pairs);

}  // namespace trendlab
