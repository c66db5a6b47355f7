#include "collabnet/time.hpp"

#include <cstdio>

namespace collabnet {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::optional<std::int64_t> parse_num(std::string_view s) {
    if (!all_digits(s)) return std::nullopt;
    std::int64_t v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

bool valid_civil(std::int64_t y, std::int64_t m, std::int64_t d) {
    if (m < 1 || m > 12 || d < 1) return false;
    static const int days_in_month[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int dim = days_in_month[m - 1];
    if (m == 2 && (y % 4 == 0 && (y % 100 != 0 || y % 400 == 0))) dim = 29;
    return d <= dim;
}

}  // namespace

std::optional<Instant> parse_instant(std::string_view s) {
    // YYYY-MM-DDTHH:MM:SSZ
    if (s.size() != 20 || s[4] != '-' || s[7] != '-' || s[10] != 'T' || s[13] != ':' ||
        s[16] != ':' || s[19] != 'Z')
        return std::nullopt;
    auto y = parse_num(s.substr(0, 4));
    auto mo = parse_num(s.substr(5, 2));
    auto d = parse_num(s.substr(8, 2));
    auto h = parse_num(s.substr(11, 2));
    auto mi = parse_num(s.substr(14, 2));
    auto sec = parse_num(s.substr(17, 2));
    if (!y || !mo || !d || !h || !mi || !sec) return std::nullopt;
    if (!valid_civil(*y, *mo, *d)) return std::nullopt;
    if (*h > 23 || *mi > 59 || *sec > 60) return std::nullopt;
    Day days = days_from_civil(*y, static_cast<unsigned>(*mo), static_cast<unsigned>(*d));
    return days * kSecondsPerDay + *h * 3600 + *mi * 60 + *sec;
}

std::string format_instant(Instant t) {
    Day d = day_of(t);
    CivilDate cd = civil_from_days(d);
    std::int64_t sod = t - d * kSecondsPerDay;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(cd.year), cd.month, cd.day,
                  static_cast<long long>(sod / 3600), static_cast<long long>(sod / 60 % 60),
                  static_cast<long long>(sod % 60));
    return buf;
}

std::optional<Day> parse_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    auto y = parse_num(s.substr(0, 4));
    auto mo = parse_num(s.substr(5, 2));
    auto d = parse_num(s.substr(8, 2));
    if (!y || !mo || !d || !valid_civil(*y, *mo, *d)) return std::nullopt;
    return days_from_civil(*y, static_cast<unsigned>(*mo), static_cast<unsigned>(*d));
}

std::string format_date(Day d) {
    CivilDate cd = civil_from_days(d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02u", static_cast<long long>(cd.year), cd.month,
                  cd.day);
    return buf;
}

}  // namespace collabnet
