#include "burnout/date.hpp"

#include <cstdio>
#include <stdexcept>

namespace burnout {

namespace {

// Days-from-civil algorithm (Howard Hinnant's public-domain derivation).
std::int32_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);             // [0, 399]
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;  // [0, 365]
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;            // [0, 146096]
    return era * 146097 + static_cast<std::int32_t>(doe) - 719468;
}

bool valid_civil(int y, int m, int d) {
    if (m < 1 || m > 12 || d < 1) return false;
    static const int days_in_month[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int limit = days_in_month[m - 1];
    const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (m == 2 && leap) limit = 29;
    return d <= limit;
}

}  // namespace

Date make_date(int year, int month, int day) {
    if (!valid_civil(year, month, day)) {
        throw std::invalid_argument("invalid calendar date " + std::to_string(year) + "-" +
                                    std::to_string(month) + "-" + std::to_string(day));
    }
    return Date{days_from_civil(year, month, day)};
}

CivilDate civil_from_date(Date date) {
    std::int32_t z = date.serial + 719468;
    const std::int32_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);                 // [0, 146096]
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;   // [0, 399]
    const int y = static_cast<int>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);                 // [0, 365]
    const unsigned mp = (5 * doy + 2) / 153;                                      // [0, 11]
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;                              // [1, 31]
    const unsigned m = mp + (mp < 10 ? 3 : -9);                                   // [1, 12]
    return CivilDate{y + (m <= 2), static_cast<int>(m), static_cast<int>(d)};
}

Date parse_date(const std::string& text) {
    int y = 0, m = 0, d = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &extra) != 3 || text.size() != 10) {
        throw std::invalid_argument("expected ISO date YYYY-MM-DD, got '" + text + "'");
    }
    return make_date(y, m, d);
}

std::string format_date(Date d) {
    const CivilDate c = civil_from_date(d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", c.year, c.month, c.day);
    return buf;
}

std::string format_datetime(const DateTime& dt) {
    char buf[24];
    const CivilDate c = civil_from_date(dt.date);
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:00", c.year, c.month, c.day, dt.hour);
    return buf;
}

}  // namespace burnout
