#pragma once

#include <array>
#include <string>
#include <vector>

#include "gregcycle/calendar.hpp"

namespace gregcycle {

using YearCounts = std::array<int, kCycleYears>;

// counts[y] is the number of months of year y in which `day` is admissible
// and falls on `weekday`.
struct MultiplicitySequence {
  int day = 1;
  Weekday weekday;
  YearCounts counts{};

  int total() const noexcept;
};

// Brute-force generator: enumerates the twelve months of every year in the
// cycle. Throws std::domain_error if day is outside 1..31.
MultiplicitySequence multiplicity_sequence(int day, Weekday weekday);

// Representative 1..7 of day mod 7 (7 replaces 0). Domain 1..28.
int reduce_day(int day);

// (weekday + 1 - d_bar) mod 7, i.e. the weekday argument of M(1, .) that
// reproduces M(d, weekday) for any d with reduce_day(d) == d_bar.
Weekday toeplitz_weekday(int d_bar, Weekday weekday);

// Table of cycle totals. Rows 0..6 hold the day classes 1..7, rows 7..9
// hold the literal days 29, 30 and 31.
struct OccurrenceTable {
  static constexpr int kRows = 10;
  std::array<std::array<int, Weekday::kCount>, kRows> cells{};

  static constexpr std::array<int, kRows> kRowDays = {1, 2, 3, 4, 5, 6, 7, 29, 30, 31};

  // Label in the published layout, e.g. "1 (8,15,22)" or "29".
  static std::string row_label(int row);
  // Row index for a day class 1..7 or literal day 29..31.
  static int row_of(int day_class);

  const std::array<int, Weekday::kCount>& row_for(int day_class) const {
    return cells[static_cast<std::size_t>(row_of(day_class))];
  }
  int row_sum(int row) const;
};

OccurrenceTable occurrence_table();

}  // namespace gregcycle
