#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace panelcast {

/// Calendar date stored as a count of days since 1970-01-01.
/// Arithmetic and comparisons operate on whole days; time of day does not exist.
class Date {
public:
    Date() = default;
    explicit Date(std::int64_t days) : days_(days) {}

    static Date from_ymd(int year, int month, int day);

    /// Parses "YYYY-MM-DD". Throws std::runtime_error on malformed input.
    static Date parse(std::string_view iso);

    std::int64_t days() const { return days_; }

    void to_ymd(int& year, int& month, int& day) const;
    std::string to_string() const;

    /// 0 = Monday ... 6 = Sunday.
    int day_of_week() const;
    bool is_weekend() const { return day_of_week() >= 5; }

    /// 0-based day within the year (Jan 1 -> 0).
    int day_of_year() const;

    Date operator+(std::int64_t d) const { return Date(days_ + d); }
    Date operator-(std::int64_t d) const { return Date(days_ - d); }
    std::int64_t operator-(Date other) const { return days_ - other.days_; }
    Date& operator++() { ++days_; return *this; }

    friend bool operator==(Date a, Date b) { return a.days_ == b.days_; }
    friend bool operator!=(Date a, Date b) { return a.days_ != b.days_; }
    friend bool operator<(Date a, Date b) { return a.days_ < b.days_; }
    friend bool operator<=(Date a, Date b) { return a.days_ <= b.days_; }
    friend bool operator>(Date a, Date b) { return a.days_ > b.days_; }
    friend bool operator>=(Date a, Date b) { return a.days_ >= b.days_; }

private:
    std::int64_t days_ = 0;
};

/// Inclusive date interval.
struct DateRange {
    Date start;
    Date end;

    bool contains(Date d) const { return start <= d && d <= end; }
};

/// Reads a holiday calendar: one ISO-8601 date per line, blank lines and
/// '#' comments ignored.
std::set<Date> load_holiday_file(const std::string& path);

} // namespace panelcast
