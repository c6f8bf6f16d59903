#include "ocedforge/datetime.hpp"

#include <cctype>

namespace ocedforge {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

unsigned days_in_month(int y, unsigned m) {
    static const unsigned lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return lengths[m - 1];
}

// Howard Hinnant's days-from-civil.
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }
    // Reads exactly n digits into out; false otherwise.
    bool digits(int n, int& out) {
        int v = 0;
        for (int k = 0; k < n; ++k) {
            if (done() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        out = v;
        return true;
    }
};

}  // namespace

std::int64_t DateTime::epoch_seconds() const {
    std::int64_t days = days_from_civil(year, month, day);
    std::int64_t local = days * 86400 + hour * 3600 + minute * 60 + second;
    return local - static_cast<std::int64_t>(offset_minutes) * 60;
}

std::optional<DateTime> parse_iso8601(std::string_view text) {
    Cursor c{text};
    DateTime dt;

    bool negative_year = c.eat('-');
    int y = 0;
    if (!c.digits(4, y)) return std::nullopt;
    // years beyond 4 digits are accepted
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        y = y * 10 + (c.peek() - '0');
        ++c.i;
    }
    dt.year = negative_year ? -y : y;

    int mo = 0, d = 0, h = 0, mi = 0, se = 0;
    if (!c.eat('-') || !c.digits(2, mo)) return std::nullopt;
    if (!c.eat('-') || !c.digits(2, d)) return std::nullopt;
    if (!c.eat('T') || !c.digits(2, h)) return std::nullopt;
    if (!c.eat(':') || !c.digits(2, mi)) return std::nullopt;
    if (!c.eat(':') || !c.digits(2, se)) return std::nullopt;

    if (mo < 1 || mo > 12) return std::nullopt;
    dt.month = static_cast<unsigned>(mo);
    if (d < 1 || static_cast<unsigned>(d) > days_in_month(dt.year, dt.month))
        return std::nullopt;
    dt.day = static_cast<unsigned>(d);
    if (h > 23 || mi > 59 || se > 59) return std::nullopt;
    dt.hour = static_cast<unsigned>(h);
    dt.minute = static_cast<unsigned>(mi);
    dt.second = static_cast<unsigned>(se);

    if (c.eat('.')) {
        std::size_t start = c.i;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.i;
        if (c.i == start) return std::nullopt;
        dt.fraction = std::string(text.substr(start, c.i - start));
    }

    if (c.eat('Z')) {
        dt.offset_minutes = 0;
    } else if (c.peek() == '+' || c.peek() == '-') {
        int sign = c.peek() == '+' ? 1 : -1;
        ++c.i;
        int oh = 0, om = 0;
        if (!c.digits(2, oh) || !c.eat(':') || !c.digits(2, om)) return std::nullopt;
        if (oh > 14 || om > 59) return std::nullopt;
        dt.offset_minutes = sign * (oh * 60 + om);
    } else {
        return std::nullopt;  // offset is mandatory
    }

    if (!c.done()) return std::nullopt;
    return dt;
}

}  // namespace ocedforge
