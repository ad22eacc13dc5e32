#include "trendlab/time.hpp"

#include <cstdio>

#include "trendlab/error.hpp"

namespace trendlab {

const char* resolution_name(Resolution res) {
    return res == Resolution::Hourly ? "1h" : "1d";
}

Resolution parse_resolution(const std::string& text) {
    if (text == "1h" || text == "hourly") return Resolution::Hourly;
    if (text == "1d" || text == "daily") return Resolution::Daily;
    throw Error("unknown resolution '" + text + "' (expected 1h or 1d)");
}

// Days-from-civil / civil-from-days after Howard Hinnant's algorithms.
std::int64_t days_from_civil(const CivilDate& date) {
    std::int64_t y = date.year;
    const int m = date.month;
    const int d = date.day;
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t days) {
    days += 719468;
    const std::int64_t era = (days >= 0 ? days : days - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(days - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp < 10 ? mp + 3 : mp - 9;
    return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m),
                     static_cast<int>(d)};
}

namespace {

bool is_leap(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap(year)) return 29;
    return kDays[month - 1];
}

}  // namespace

Timestamp parse_iso_date(const std::string& text) {
    int year = 0, month = 0, day = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%d-%d-%d%c", &year, &month, &day, &tail) != 3 ||
        text.size() != 10 || text[4] != '-' || text[7] != '-') {
        throw ParseError("unparseable date '" + text + "' (expected YYYY-MM-DD)");
    }
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month)) {
        throw ParseError("invalid calendar date '" + text + "'");
    }
    return days_from_civil({year, month, day}) * kSecondsPerDay;
}

std::int64_t utc_day(Timestamp ts) {
    return ts >= 0 ? ts / kSecondsPerDay : (ts - kSecondsPerDay + 1) / kSecondsPerDay;
}

std::string format_iso_date(Timestamp ts) {
    const CivilDate d = civil_from_days(utc_day(ts));
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

std::string format_iso_datetime(Timestamp ts) {
    const std::int64_t day = utc_day(ts);
    const CivilDate d = civil_from_days(day);
    const std::int64_t secs = ts - day * kSecondsPerDay;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", d.year, d.month,
                  d.day, static_cast<int>(secs / 3600), static_cast<int>(secs / 60 % 60),
                  static_cast<int>(secs % 60));
    return buf;
}

}  // namespace trendlab
