#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trendlab/time.hpp"

namespace trendlab {

/// One raw trade: exchange timestamp, traded price, traded volume.
struct Tick {
    Timestamp timestamp = 0;
    double price = 0.0;
    double volume = 0.0;
};

/// Raw trade feed, ordered by non-decreasing timestamp, prices > 0.
struct TickSeries {
    std::vector<Tick> rows;

    bool empty() const { return rows.empty(); }
    std::size_t size() const { return rows.size(); }
};

/// One close-price bar on the uniform grid. `filled` marks bars that had no
/// trades and carry the previous close forward.
struct Bar {
    Timestamp timestamp = 0;
    double close = 0.0;
    bool filled = false;
};

/// Uniformly spaced closing prices for one asset at one resolution.
/// Consecutive bar timestamps differ by exactly bar_seconds(resolution).
struct PriceSeries {
    std::string asset_id;
    Resolution resolution = Resolution::Hourly;
    std::vector<Bar> bars;

    bool empty() const { return bars.empty(); }
    std::size_t size() const { return bars.size(); }
    Timestamp start() const { return bars.front().timestamp; }
    Timestamp end_exclusive() const {
        return bars.back().timestamp + bar_seconds(resolution);
    }
    double close(std::size_t i) const { return bars[i].close; }

    std::size_t filled_count() const;
    std::vector<double> closes() const;
};

/// Parse bitcoincharts-style tick rows `unix_seconds,price,volume` (no
/// header). Rows are stable-sorted by timestamp if out of order. Throws
/// ParseError with the offending line number on malformed rows.
TickSeries parse_tick_csv(std::istream& input);

/// Parse a Yahoo! Finance daily CSV (`Date,Open,High,Low,Close,Adj Close,
/// Volume` header, ISO dates, possible "null" fields). Rows whose Close is
/// null are dropped, then the uniform daily grid is rebuilt with forward
/// fill across non-trading days.
PriceSeries parse_ohlc_csv(std::istream& input, const std::string& asset_id = "");

/// Resample ticks onto the uniform grid. A bar's close is the price of the
/// last tick strictly before the bar's end boundary; bars without ticks
/// carry the previous close with filled=true. The series starts at the bar
/// containing the first tick.
PriceSeries resample(const TickSeries& ticks, Resolution resolution,
                     const std::string& asset_id = "");

/// Bars with start <= timestamp < end. Throws Error("empty slice") when the
/// range selects nothing.
PriceSeries slice(const PriceSeries& series, Timestamp start, Timestamp end);

}  // namespace trendlab
