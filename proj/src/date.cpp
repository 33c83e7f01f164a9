#include "emolag/date.hpp"

#include <cctype>
#include <cstdio>

namespace emolag {

// Howard Hinnant's chrono-compatible civil-date algorithms.
Day days_from_civil(int y, unsigned m, unsigned d) {
  y -= m <= 2;
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);             // [0, 399]
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;   // [0, 365]
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;            // [0, 146096]
  return static_cast<Day>(era * 146097 + static_cast<int>(doe) - 719468);
}

CivilDate civil_from_days(Day z) {
  int zi = z + 719468;
  const int era = (zi >= 0 ? zi : zi - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(zi - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const int y = static_cast<int>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return CivilDate{y + (m <= 2), m, d};
}

std::string format_date(Day z) {
  const CivilDate c = civil_from_days(z);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", c.year, c.month, c.day);
  return buf;
}

namespace {

bool parse_uint(std::string_view s, std::size_t pos, std::size_t len, unsigned& out) {
  if (pos + len > s.size()) return false;
  unsigned v = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + static_cast<unsigned>(s[i] - '0');
  }
  out = v;
  return true;
}

bool valid_ymd(unsigned y, unsigned m, unsigned d) {
  if (m < 1 || m > 12 || d < 1 || d > 31) return false;
  static const unsigned mdays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  unsigned dm = mdays[m - 1];
  if (m == 2 && (y % 4 == 0 && (y % 100 != 0 || y % 400 == 0))) dm = 29;
  return d <= dm;
}

}  // namespace

std::optional<Day> parse_date(std::string_view s) {
  unsigned y, m, d;
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  if (!parse_uint(s, 0, 4, y) || !parse_uint(s, 5, 2, m) || !parse_uint(s, 8, 2, d))
    return std::nullopt;
  if (!valid_ymd(y, m, d)) return std::nullopt;
  return days_from_civil(static_cast<int>(y), m, d);
}

std::optional<std::int64_t> parse_timestamp(std::string_view s) {
  if (s.size() == 10) {
    auto day = parse_date(s);
    if (!day) return std::nullopt;
    return static_cast<std::int64_t>(*day) * 86400;
  }
  if (s.size() < 20) return std::nullopt;
  auto day = parse_date(s.substr(0, 10));
  if (!day) return std::nullopt;
  if (s[10] != 'T' && s[10] != 't' && s[10] != ' ') return std::nullopt;
  unsigned hh, mm, ss;
  if (s[13] != ':' || s[16] != ':') return std::nullopt;
  if (!parse_uint(s, 11, 2, hh) || !parse_uint(s, 14, 2, mm) || !parse_uint(s, 17, 2, ss))
    return std::nullopt;
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  std::size_t pos = 19;
  if (pos < s.size() && s[pos] == '.') {  // fractional seconds: truncated
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  if (pos >= s.size()) return std::nullopt;
  std::int64_t offset = 0;
  if (s[pos] == 'Z' || s[pos] == 'z') {
    if (pos + 1 != s.size()) return std::nullopt;
  } else if (s[pos] == '+' || s[pos] == '-') {
    const int sign = s[pos] == '+' ? 1 : -1;
    unsigned oh, om;
    if (pos + 6 != s.size() || s[pos + 3] != ':') return std::nullopt;
    if (!parse_uint(s, pos + 1, 2, oh) || !parse_uint(s, pos + 4, 2, om)) return std::nullopt;
    if (oh > 23 || om > 59) return std::nullopt;
    offset = sign * (static_cast<std::int64_t>(oh) * 3600 + om * 60);
  } else {
    return std::nullopt;
  }
  const std::int64_t local =
      static_cast<std::int64_t>(*day) * 86400 + hh * 3600 + mm * 60 + ss;
  return local - offset;
}

std::string format_timestamp(std::int64_t epoch_seconds) {
  std::int64_t days = epoch_seconds / 86400;
  std::int64_t rem = epoch_seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  const CivilDate c = civil_from_days(static_cast<Day>(days));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ", c.year, c.month, c.day,
                static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60),
                static_cast<int>(rem % 60));
  return buf;
}

Day day_of_timestamp(std::int64_t epoch_seconds, int utc_offset_minutes) {
  const std::int64_t shifted = epoch_seconds + static_cast<std::int64_t>(utc_offset_minutes) * 60;
  std::int64_t days = shifted / 86400;
  if (shifted % 86400 < 0) --days;
  return static_cast<Day>(days);
}

}  // namespace emolag
