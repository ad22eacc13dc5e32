#pragma once

#include <cstdint>
#include <string>

namespace trendlab {

/// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

constexpr std::int64_t kSecondsPerHour = 3600;
constexpr std::int64_t kSecondsPerDay = 86400;
constexpr std::int64_t kSecondsPerYear = 365 * kSecondsPerDay;

enum class Resolution { Hourly, Daily };

constexpr std::int64_t bar_seconds(Resolution res) {
    return res == Resolution::Hourly ? kSecondsPerHour : kSecondsPerDay;
}

/// Bars per calendar year on a gap-free grid of the given resolution.
/// Hourly grids are forward-filled across the full week (8760 bars/year);
/// daily equity is annualized with the trading-day convention (252).
constexpr double bars_per_year(Resolution res) {
    return res == Resolution::Hourly ? 8760.0 : 252.0;
}

const char* resolution_name(Resolution res);

/// Parse "1h" / "1d" (also accepts "hourly" / "daily").
Resolution parse_resolution(const std::string& text);

/// Civil date (proleptic Gregorian, UTC).
struct CivilDate {
    int year = 1970;
    int month = 1;
    int day = 1;
};

std::int64_t days_from_civil(const CivilDate& date);
CivilDate civil_from_days(std::int64_t days);

/// Parse an ISO "YYYY-MM-DD" date to midnight UTC. Throws ParseError.
Timestamp parse_iso_date(const std::string& text);

/// Format a timestamp as "YYYY-MM-DD" (UTC calendar date of the instant).
std::string format_iso_date(Timestamp ts);

/// Format a timestamp as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_iso_datetime(Timestamp ts);

/// UTC day index (timestamp / 86400, floored for negative values).
std::int64_t utc_day(Timestamp ts);

}  // namespace trendlab
