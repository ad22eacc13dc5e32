#include "trendlab/marketdata.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>

#include "trendlab/error.hpp"

namespace trendlab {

std::size_t PriceSeries::filled_count() const {
    return static_cast<std::size_t>(
        std::count_if(bars.begin(), bars.end(), [](const Bar& b) { return b.filled; }));
}

std::vector<double> PriceSeries::closes() const {
    std::vector<double> out;
    out.reserve(bars.size());
    for (const Bar& b : bars) out.push_back(b.close);
    return out;
}

namespace {

// Strips a trailing '\r' so CRLF files parse the same as LF files.
void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

double parse_number(const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("non-numeric field '" + field + "'", line_no);
    }
    return value;
}

std::int64_t parse_integer(const std::string& field, std::size_t line_no) {
    std::int64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("non-numeric timestamp '" + field + "'", line_no);
    }
    return value;
}

}  // namespace

TickSeries parse_tick_csv(std::istream& input) {
    TickSeries ticks;
    std::string line;
    std::size_t line_no = 0;
    bool sorted = true;
    while (std::getline(input, line)) {
        ++line_no;
        chomp(line);
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 3) {
            throw ParseError("expected 3 fields, got " + std::to_string(fields.size()),
                             line_no);
        }
        Tick tick;
        tick.timestamp = parse_integer(fields[0], line_no);
        tick.price = parse_number(fields[1], line_no);
        tick.volume = parse_number(fields[2], line_no);
        if (tick.price <= 0.0) {
            throw ParseError("non-positive price " + fields[1], line_no);
        }
        if (tick.volume < 0.0) {
            throw ParseError("negative volume " + fields[2], line_no);
        }
        if (!ticks.rows.empty() && tick.timestamp < ticks.rows.back().timestamp) {
            sorted = false;
        }
        ticks.rows.push_back(tick);
    }
    if (!sorted) {
        std::stable_sort(ticks.rows.begin(), ticks.rows.end(),
                         [](const Tick& a, const Tick& b) { return a.timestamp < b.timestamp; });
    }
    return ticks;
}

PriceSeries parse_ohlc_csv(std::istream& input, const std::string& asset_id) {
    static const std::string kHeader = "Date,Open,High,Low,Close,Adj Close,Volume";
    std::string line;
    if (!std::getline(input, line)) throw ParseError("missing header row");
    chomp(line);
    if (line != kHeader) {
        throw ParseError("unexpected header '" + line + "' (expected '" + kHeader + "')");
    }

    // Date -> close, keyed by UTC day so the grid rebuild below is trivial.
    std::map<std::int64_t, double> closes_by_day;
    std::size_t line_no = 1;
    while (std::getline(input, line)) {
        ++line_no;
        chomp(line);
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 7) {
            throw ParseError("expected 7 fields, got " + std::to_string(fields.size()),
                             line_no);
        }
        Timestamp ts;
        try {
            ts = parse_iso_date(fields[0]);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()), line_no);
        }
        if (fields[4] == "null") continue;  // market holiday row, dropped
        const double close = parse_number(fields[4], line_no);
        if (close <= 0.0) throw ParseError("non-positive close " + fields[4], line_no);
        closes_by_day[utc_day(ts)] = close;
    }

    PriceSeries series;
    series.asset_id = asset_id;
    series.resolution = Resolution::Daily;
    if (closes_by_day.empty()) return series;

    const std::int64_t first_day = closes_by_day.begin()->first;
    const std::int64_t last_day = closes_by_day.rbegin()->first;
    series.bars.reserve(static_cast<std::size_t>(last_day - first_day + 1));
    double last_close = 0.0;
    for (std::int64_t day = first_day; day <= last_day; ++day) {
        const auto it = closes_by_day.find(day);
        Bar bar;
        bar.timestamp = day * kSecondsPerDay;
        if (it != closes_by_day.end()) {
            bar.close = last_close = it->second;
            bar.filled = false;
        } else {
            bar.close = last_close;
            bar.filled = true;
        }
        series.bars.push_back(bar);
    }
    return series;
}

PriceSeries resample(const TickSeries& ticks, Resolution resolution,
                     const std::string& asset_id) {
    if (ticks.empty()) throw Error("no data");

    const std::int64_t step = bar_seconds(resolution);
    const auto bar_start = [step](Timestamp ts) {
        return ts >= 0 ? ts / step * step : (ts - step + 1) / step * step;
    };

    PriceSeries series;
    series.asset_id = asset_id;
    series.resolution = resolution;

    const Timestamp first_bar = bar_start(ticks.rows.front().timestamp);
    const Timestamp last_bar = bar_start(ticks.rows.back().timestamp);
    series.bars.reserve(static_cast<std::size_t>((last_bar - first_bar) / step + 1));

    std::size_t i = 0;
    double last_price = 0.0;
    for (Timestamp bar_ts = first_bar; bar_ts <= last_bar; bar_ts += step) {
        const Timestamp bar_end = bar_ts + step;
        bool traded = false;
        while (i < ticks.rows.size() && ticks.rows[i].timestamp < bar_end) {
            last_price = ticks.rows[i].price;
            traded = true;
            ++i;
        }
        series.bars.push_back(Bar{bar_ts, last_price, !traded});
    }
    return series;
}

PriceSeries slice(const PriceSeries& series, Timestamp start, Timestamp end) {
    if (start >= end) throw Error("invalid slice range (start must precede end)");
    const auto first = std::lower_bound(
        series.bars.begin(), series.bars.end(), start,
        [](const Bar& b, Timestamp t) { return b.timestamp < t; });
    const auto last = std::lower_bound(
        first, series.bars.end(), end,
        [](const Bar& b, Timestamp t) { return b.timestamp < t; });
    if (first == last) throw Error("empty slice");

    PriceSeries out;
    out.asset_id = series.asset_id;
    out.resolution = series.resolution;
    out.bars.assign(first, last);
    return out;
}

}  // namespace trendlab
