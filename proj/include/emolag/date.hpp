#ifndef EMOLAG_DATE_HPP
#define EMOLAG_DATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace emolag {

// Calendar day, counted in days since 1970-01-01 (negative before).
using Day = std::int32_t;

struct CivilDate {
  int year;
  unsigned month;  // 1..12
  unsigned day;    // 1..31
};

Day days_from_civil(int year, unsigned month, unsigned day);
CivilDate civil_from_days(Day z);

// "YYYY-MM-DD"
std::string format_date(Day z);
std::optional<Day> parse_date(std::string_view s);

// RFC3339 date-time ("2020-03-15T10:00:00Z", fractional seconds and
// numeric offsets accepted). A bare date parses as midnight UTC.
// Returns seconds since the Unix epoch.
std::optional<std::int64_t> parse_timestamp(std::string_view s);

// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_timestamp(std::int64_t epoch_seconds);

// Calendar day that `epoch_seconds` falls on once shifted into the
// analysis timezone (a fixed offset in minutes east of UTC).
Day day_of_timestamp(std::int64_t epoch_seconds, int utc_offset_minutes);

}  // namespace emolag

#endif  // EMOLAG_DATE_HPP
