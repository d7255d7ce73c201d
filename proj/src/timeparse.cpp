#include "crosscheck/timeparse.hpp"

#include "crosscheck/error.hpp"

#include <array>
#include <cctype>
#include <cstdio>

namespace crosscheck {

namespace {

// Days from 1970-01-01 to y-m-d in the proleptic Gregorian calendar
// (Howard Hinnant's days_from_civil).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yr + (m <= 2));
}

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> days = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return days[m - 1];
}

[[noreturn]] void bad(const std::string& text) {
    throw Error(ErrorKind::ParseError, "invalid RFC 3339 timestamp '" + text + "'");
}

int read_digits(const std::string& s, std::size_t pos, std::size_t count, const std::string& whole) {
    int value = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (pos + i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos + i]))) bad(whole);
        value = value * 10 + (s[pos + i] - '0');
    }
    return value;
}

} // namespace

Instant parse_rfc3339(const std::string& text) {
    // YYYY-MM-DDTHH:MM:SS[.frac](Z|+hh:mm|-hh:mm)
    if (text.size() < 20) bad(text);
    const int year = read_digits(text, 0, 4, text);
    if (text[4] != '-') bad(text);
    const int month = read_digits(text, 5, 2, text);
    if (text[7] != '-') bad(text);
    const int day = read_digits(text, 8, 2, text);
    if (text[10] != 'T' && text[10] != 't' && text[10] != ' ') bad(text);
    const int hour = read_digits(text, 11, 2, text);
    if (text[13] != ':') bad(text);
    const int minute = read_digits(text, 14, 2, text);
    if (text[16] != ':') bad(text);
    const int second = read_digits(text, 17, 2, text);

    if (month < 1 || month > 12) bad(text);
    if (day < 1 || day > days_in_month(year, month)) bad(text);
    if (hour > 23 || minute > 59 || second > 59) bad(text);

    std::size_t pos = 19;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) bad(text);
    }

    if (pos >= text.size()) bad(text);
    std::int64_t offset = 0;
    if (text[pos] == 'Z' || text[pos] == 'z') {
        ++pos;
    } else if (text[pos] == '+' || text[pos] == '-') {
        const int sign = text[pos] == '+' ? 1 : -1;
        const int oh = read_digits(text, pos + 1, 2, text);
        if (pos + 3 >= text.size() || text[pos + 3] != ':') bad(text);
        const int om = read_digits(text, pos + 4, 2, text);
        if (oh > 23 || om > 59) bad(text);
        offset = sign * (oh * 3600 + om * 60);
        pos += 6;
    } else {
        bad(text);
    }
    if (pos != text.size()) bad(text);

    const std::int64_t days = days_from_civil(year, month, day);
    return days * 86400 + hour * 3600 + minute * 60 + second - offset;
}

std::string format_rfc3339(Instant t) {
    std::int64_t days = t / 86400;
    std::int64_t rem = t % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    int y, m, d;
    civil_from_days(days, y, m, d);
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02lld:%02lld:%02lldZ", y, m, d,
                  static_cast<long long>(rem / 3600), static_cast<long long>((rem / 60) % 60),
                  static_cast<long long>(rem % 60));
    return buf;
}

} // namespace crosscheck
