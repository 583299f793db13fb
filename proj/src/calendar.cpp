#include "gregcycle/calendar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

namespace gregcycle {

namespace {

constexpr std::array<std::string_view, 7> kNames = {
    "Sunday", "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday"};
constexpr std::array<std::string_view, 7> kAbbrevs = {"Su", "Mo", "Tu", "We", "Th", "Fr", "Sa"};

constexpr std::array<int, 12> kCommonMonthLengths = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

constexpr int floor_mod(std::int64_t a, int n) {
  const auto r = static_cast<int>(a % n);
  return r < 0 ? r + n : r;
}

// --- oracle route -------------------------------------------------------
// Leap years are counted with the inclusion-exclusion formula rather than
// the per-year predicate used by the congruence.

// Number of leap years in [0, year).
constexpr std::int64_t oracle_leap_years_before(std::int64_t year) {
  if (year <= 0) return 0;
  const std::int64_t last = year - 1;
  return last / 4 - last / 100 + last / 400 + 1;  // +1 for year 0
}

constexpr bool oracle_year_has_leap_day(std::int64_t year) {
  return oracle_leap_years_before(year + 1) - oracle_leap_years_before(year) == 1;
}

constexpr std::array<int, 13> kCumulativeCommon = [] {
  std::array<int, 13> c{};
  for (std::size_t m = 0; m < 12; ++m) c[m + 1] = c[m] + kCommonMonthLengths[m];
  return c;
}();

constexpr std::int64_t oracle_serial(int day, int month, int year) {
  std::int64_t n = 365LL * year + oracle_leap_years_before(year);
  n += kCumulativeCommon[static_cast<std::size_t>(month - 1)];
  if (month > 2 && oracle_year_has_leap_day(year)) ++n;
  return n + (day - 1);
}

constexpr std::int64_t kAnchorSerial = oracle_serial(15, 10, 1582);
constexpr int kAnchorWeekday = 5;  // Friday

static_assert(oracle_serial(1, 1, 400) == kCycleDays);
static_assert(kCycleDays % 7 == 0);

}  // namespace

std::optional<Weekday> Weekday::from_name(std::string_view name) noexcept {
  for (int i = 0; i < kCount; ++i) {
    if (iequals(name, kNames[i]) || iequals(name, kAbbrevs[i])) {
      return Weekday(static_cast<std::uint8_t>(i));
    }
  }
  return std::nullopt;
}

std::string_view Weekday::name() const noexcept { return kNames[idx_]; }
std::string_view Weekday::abbrev() const noexcept { return kAbbrevs[idx_]; }

int month_key(int month) {
  if (month < 1 || month > 12) {
    throw std::domain_error("month out of range 1..12: " + std::to_string(month));
  }
  if (month == 2) return 12;
  return (month + 10) % 12;
}

int days_in_month(int month, int year) {
  if (month < 1 || month > 12) {
    throw std::domain_error("month out of range 1..12: " + std::to_string(month));
  }
  if (month == 2 && is_leap(year)) return 29;
  return kCommonMonthLengths[static_cast<std::size_t>(month - 1)];
}

bool is_admissible(int day, int month, int year) noexcept {
  if (year < 0 || month < 1 || month > 12 || day < 1) return false;
  return day <= days_in_month(month, year);
}

YearParts YearParts::of(int year) {
  if (year < 0) throw std::domain_error("negative year");
  return YearParts{year % 100, year / 100, is_leap(year) ? 1 : 0};
}

CalendarDate::CalendarDate(int day, int month, int year) : day_(day), month_(month), year_(year) {
  if (!is_admissible(day, month, year)) {
    throw std::domain_error("inadmissible date " + std::to_string(year) + "-" +
                            std::to_string(month) + "-" + std::to_string(day));
  }
}

Weekday day_of_week(const CalendarDate& date) {
  const int m = month_key(date.month());
  const YearParts p = YearParts::of(date.year());
  // floor(2.6 m - 0.2) == (13 m - 1) div 5 exactly, and 13 m - 1 > 0.
  const int bracket = date.day() + (13 * m - 1) / 5 + p.tens + p.tens / 4 + p.hundreds / 4 -
                      2 * p.hundreds - (p.leap + 1) * (m / 11);
  return Weekday::from_index(floor_mod(bracket, 7));
}

std::int64_t oracle_day_number(const CalendarDate& date) {
  return oracle_serial(date.day(), date.month(), date.year());
}

Weekday oracle_day_of_week(const CalendarDate& date) {
  const std::int64_t elapsed = oracle_day_number(date) - kAnchorSerial;
  return Weekday::from_index(floor_mod(elapsed + kAnchorWeekday, 7));
}

CalendarDate next_day(const CalendarDate& date) {
  if (is_admissible(date.day() + 1, date.month(), date.year())) {
    return CalendarDate(date.day() + 1, date.month(), date.year());
  }
  if (date.month() < 12) return CalendarDate(1, date.month() + 1, date.year());
  return CalendarDate(1, 1, date.year() + 1);
}

}  // namespace gregcycle
