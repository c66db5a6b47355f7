#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace collabnet {

// Seconds since the Unix epoch, UTC.
using Instant = std::int64_t;
// Days since the Unix epoch (UTC calendar day).
using Day = std::int64_t;

constexpr std::int64_t kSecondsPerDay = 86400;

constexpr Day day_of(Instant t) {
    return t >= 0 ? t / kSecondsPerDay : (t - (kSecondsPerDay - 1)) / kSecondsPerDay;
}

// Howard Hinnant's civil-date algorithms.
constexpr Day days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct CivilDate {
    std::int64_t year;
    unsigned month;
    unsigned day;
};

constexpr CivilDate civil_from_days(Day z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {y + (m <= 2), m, d};
}

// "YYYY-MM-DDTHH:MM:SSZ" -> instant; nullopt on any malformation.
std::optional<Instant> parse_instant(std::string_view s);
std::string format_instant(Instant t);

// "YYYY-MM-DD" -> day; nullopt on malformation.
std::optional<Day> parse_date(std::string_view s);
std::string format_date(Day d);

}  // namespace collabnet
