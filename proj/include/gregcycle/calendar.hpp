#pragma once

// Gregorian calendar arithmetic: leap rule, month key, closed-form day of
// week, admissibility, and an independent day-counting oracle.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace gregcycle {

inline constexpr int kCycleYears = 400;
inline constexpr int kCycleDays = 146097;
inline constexpr int kLeapYearsPerCycle = 97;

class Weekday {
 public:
  static constexpr int kCount = 7;

  constexpr Weekday() noexcept = default;

  // Throws std::domain_error unless 0 <= index <= 6 (0 = Sunday).
  static constexpr Weekday from_index(int index) {
    if (index < 0 || index >= kCount) {
      throw std::domain_error("weekday index out of range 0..6");
    }
    return Weekday(static_cast<std::uint8_t>(index));
  }

  // Accepts full English names and two-letter abbreviations, any case.
  static std::optional<Weekday> from_name(std::string_view name) noexcept;

  constexpr int index() const noexcept { return idx_; }
  std::string_view name() const noexcept;
  std::string_view abbrev() const noexcept;  // "Su".."Sa"

  friend constexpr bool operator==(Weekday, Weekday) = default;
  friend constexpr auto operator<=>(Weekday, Weekday) = default;

 private:
  constexpr explicit Weekday(std::uint8_t i) noexcept : idx_(i) {}
  std::uint8_t idx_ = 0;
};

namespace weekdays {
inline constexpr Weekday Sunday = Weekday::from_index(0);
inline constexpr Weekday Monday = Weekday::from_index(1);
inline constexpr Weekday Tuesday = Weekday::from_index(2);
inline constexpr Weekday Wednesday = Weekday::from_index(3);
inline constexpr Weekday Thursday = Weekday::from_index(4);
inline constexpr Weekday Friday = Weekday::from_index(5);
inline constexpr Weekday Saturday = Weekday::from_index(6);
}  // namespace weekdays

// Year 0 is divisible by 400 and therefore a leap year.
constexpr bool is_leap(int year) noexcept {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

// March = 1, ..., December = 10, January = 11, February = 12.
int month_key(int month);

int days_in_month(int month, int year);

bool is_admissible(int day, int month, int year) noexcept;

struct YearParts {
  int tens = 0;      // last two digits
  int hundreds = 0;  // leading digits
  int leap = 0;

  static YearParts of(int year);
};

class CalendarDate {
 public:
  // Throws std::domain_error for inadmissible triples or negative years.
  CalendarDate(int day, int month, int year);

  int day() const noexcept { return day_; }
  int month() const noexcept { return month_; }
  int year() const noexcept { return year_; }

  friend bool operator==(const CalendarDate&, const CalendarDate&) = default;

 private:
  int day_;
  int month_;
  int year_;
};

// Closed-form congruence. All floor terms are evaluated in integers; the
// residue is taken in 0..6 even when the bracket is negative.
Weekday day_of_week(const CalendarDate& date);

// Counts elapsed days from 1582-10-15 (a Friday). Shares no arithmetic with
// day_of_week beyond the admissibility check on its argument.
Weekday oracle_day_of_week(const CalendarDate& date);

// Days since 0000-01-01 in the proleptic Gregorian calendar, oracle route.
std::int64_t oracle_day_number(const CalendarDate& date);

// Next admissible date; used for weekday-progression checks.
CalendarDate next_day(const CalendarDate& date);

}  // namespace gregcycle
