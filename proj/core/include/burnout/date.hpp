#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace burnout {

/// Calendar date stored as a serial day count (days since 1970-01-01,
/// proleptic Gregorian). Cheap to compare and subtract, which is what the
/// rest-day and streak arithmetic lives on.
struct Date {
    std::int32_t serial = 0;

    auto operator<=>(const Date&) const = default;

    Date& operator+=(int days) {
        serial += days;
        return *this;
    }
    friend Date operator+(Date d, int days) { return Date{d.serial + days}; }
    friend Date operator-(Date d, int days) { return Date{d.serial - days}; }
    /// Whole days from other to this.
    friend int operator-(Date a, Date b) { return a.serial - b.serial; }
};

/// Build a Date from civil year/month/day. Throws std::invalid_argument on
/// out-of-range month/day.
Date make_date(int year, int month, int day);

struct CivilDate {
    int year;
    int month;  // 1..12
    int day;    // 1..31
};

CivilDate civil_from_date(Date d);

/// Parse strict ISO-8601 "YYYY-MM-DD". Throws std::invalid_argument.
Date parse_date(const std::string& text);

/// Format as "YYYY-MM-DD".
std::string format_date(Date d);

/// A point on the hourly grid every fatigue computation uses.
struct DateTime {
    Date date;
    int hour = 0;  // 0..23

    auto operator<=>(const DateTime&) const = default;

    /// Absolute hour index (date.serial * 24 + hour).
    std::int64_t hour_index() const { return static_cast<std::int64_t>(date.serial) * 24 + hour; }
};

std::string format_datetime(const DateTime& dt);

}  // namespace burnout
