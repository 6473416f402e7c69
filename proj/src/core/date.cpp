#include "panelcast/core/date.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace panelcast {

namespace {

// Civil <-> serial conversions (proleptic Gregorian), Howard Hinnant's algorithms.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u
                       + static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

int parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::runtime_error("invalid number in date: '" + std::string(s) + "'");
    }
    return v;
}

} // namespace

Date Date::from_ymd(int year, int month, int day) {
    if (month < 1 || month > 12 || day < 1 || day > 31) {
        throw std::runtime_error("invalid calendar date components");
    }
    return Date(days_from_civil(year, month, day));
}

Date Date::parse(std::string_view iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') {
        throw std::runtime_error("unparseable date: '" + std::string(iso) + "' (expected YYYY-MM-DD)");
    }
    const int y = parse_int(iso.substr(0, 4));
    const int m = parse_int(iso.substr(5, 2));
    const int d = parse_int(iso.substr(8, 2));
    Date date = from_ymd(y, m, d);
    // Reject e.g. 2021-02-31, which from_ymd would silently normalize.
    int ry, rm, rd;
    date.to_ymd(ry, rm, rd);
    if (ry != y || rm != m || rd != d) {
        throw std::runtime_error("unparseable date: '" + std::string(iso) + "' (no such day)");
    }
    return date;
}

void Date::to_ymd(int& year, int& month, int& day) const {
    civil_from_days(days_, year, month, day);
}

std::string Date::to_string() const {
    int y, m, d;
    to_ymd(y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return std::string(buf);
}

int Date::day_of_week() const {
    // 1970-01-01 was a Thursday (= 3 with Monday as 0).
    return static_cast<int>(((days_ % 7) + 7 + 3) % 7);
}

int Date::day_of_year() const {
    int y, m, d;
    to_ymd(y, m, d);
    return static_cast<int>(days_ - days_from_civil(y, 1, 1));
}

std::set<Date> load_holiday_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open holiday file: " + path);
    }
    std::set<Date> holidays;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t a = line.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t");
        std::string t = line.substr(a, b - a + 1);
        if (t.empty() || t[0] == '#') continue;
        holidays.insert(Date::parse(t));
    }
    return holidays;
}

} // namespace panelcast
