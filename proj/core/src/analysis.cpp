#include "trendlab/analysis.hpp"

#include <cmath>
#include <limits>

#include "trendlab/error.hpp"
#include "trendlab/stats.hpp"

namespace trendlab {

ValueSeries to_value_series(const PriceSeries& prices) {
    ValueSeries out;
    out.resolution = prices.resolution;
    out.timestamps.reserve(prices.size());
    out.values.reserve(prices.size());
    for (const Bar& bar : prices.bars) {
        out.timestamps.push_back(bar.timestamp);
        out.values.push_back(bar.close);
    }
    return out;
}

ValueSeries equity_series(const PriceSeries& prices, const BacktestResult& result) {
    if (prices.size() != result.equity.size()) {
        throw Error("equity curve length does not match price series");
    }
    ValueSeries out;
    out.resolution = prices.resolution;
    out.timestamps.reserve(prices.size());
    for (const Bar& bar : prices.bars) out.timestamps.push_back(bar.timestamp);
    out.values = result.equity;
    return out;
}

namespace {

struct DailySeries {
    std::vector<std::int64_t> days;
    std::vector<double> values;
};

// Last value of each UTC day; hourly input collapses to its final bar.
DailySeries reduce_to_daily(const ValueSeries& series) {
    DailySeries out;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const std::int64_t day = utc_day(series.timestamps[i]);
        if (!out.days.empty() && out.days.back() == day) {
            out.values.back() = series.values[i];
        } else {
            out.days.push_back(day);
            out.values.push_back(series.values[i]);
        }
    }
    return out;
}

}  // namespace

PairedReturns align_daily(const ValueSeries& a, const ValueSeries& b) {
    const DailySeries da = reduce_to_daily(a);
    const DailySeries db = reduce_to_daily(b);

    // Intersection of the two date sets; no fill, so a 5-day market never
    // pairs against structurally flat weekend bars.
    std::vector<std::int64_t> days;
    std::vector<double> va, vb;
    std::size_t i = 0, j = 0;
    while (i < da.days.size() && j < db.days.size()) {
        if (da.days[i] < db.days[j]) {
            ++i;
        } else if (da.days[i] > db.days[j]) {
            ++j;
        } else {
            days.push_back(da.days[i]);
            va.push_back(da.values[i]);
            vb.push_back(db.values[j]);
            ++i;
            ++j;
        }
    }
    if (days.empty()) throw Error("empty intersection");

    PairedReturns out;
    for (std::size_t k = 1; k < days.size(); ++k) {
        out.days.push_back(days[k]);
        out.a.push_back(va[k] / va[k - 1] - 1.0);
        out.b.push_back(vb[k] / vb[k - 1] - 1.0);
    }
    return out;
}

CorrelationSeries rolling_correlation(const PairedReturns& pairs, int window) {
    if (window < 2) throw Error("window < 2");
    if (static_cast<std::size_t>(window) > pairs.size()) {
        throw Error("window exceeds data");
    }
    CorrelationSeries out;
    out.window = window;
    out.days = pairs.days;
    out.values.assign(pairs.size(), std::numeric_limits<double>::quiet_NaN());
    const std::size_t w = static_cast<std::size_t>(window);
    for (std::size_t t = w - 1; t < pairs.size(); ++t) {
        const std::size_t lo = t + 1 - w;
        out.values[t] = pearson(std::span(pairs.a).subspan(lo, w),
                                std::span(pairs.b).subspan(lo, w));
    }
    return out;
}

CorrelationTest correlation_significance(const PairedReturns& pairs) {
    const std::size_t n = pairs.size();
    if (n < 3) throw Error("insufficient data (need at least 3 paired returns)");
    const double r = pearson(pairs.a, pairs.b);
    if (std::isnan(r)) throw Error("degenerate series");

    CorrelationTest test;
    test.n = n;
    test.r = r;
    if (std::fabs(r) >= 1.0) {
        test.t_statistic = std::copysign(std::numeric_limits<double>::infinity(), r);
        test.p_value = 0.0;
        return test;
    }
    const double dof = static_cast<double>(n - 2);
    test.t_statistic = r * std::sqrt(dof / (1.0 - r * r));
    test.p_value = student_t_two_sided_p(test.t_statistic, dof);
    return test;
}

}  // namespace trendlab
