#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ocedforge {

/// Parsed ISO-8601 timestamp with an explicit UTC offset ('Z' or ±hh:mm).
struct DateTime {
    int year = 0;
    unsigned month = 1, day = 1;
    unsigned hour = 0, minute = 0, second = 0;
    std::string fraction;     // digits after the decimal point, may be empty
    int offset_minutes = 0;   // signed offset from UTC

    /// Seconds since the Unix epoch (UTC), ignoring the fraction.
    std::int64_t epoch_seconds() const;
};

/// Strict parse of `YYYY-MM-DDThh:mm:ss[.fff](Z|±hh:mm)`; calendar-valid
/// dates only (month lengths, leap years). The offset is mandatory.
std::optional<DateTime> parse_iso8601(std::string_view text);

}  // namespace ocedforge
