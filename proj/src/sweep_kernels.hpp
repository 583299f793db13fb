#pragma once

// Per-item kernels shared by the serial and OpenMP sweeps. Each call is
// independent of every other call.

#include "gregcycle/sweep.hpp"

namespace gregcycle::detail {

// Oracle comparison over one year. When include_entry is set, the step from
// December 31 of the previous year into this year counts for progression.
inline OracleSweepResult oracle_year(int year, bool include_entry) {
  OracleSweepResult r;
  int prev = -1;
  if (include_entry) prev = oracle_day_of_week(CalendarDate(31, 12, year - 1)).index();
  for (int m = 1; m <= 12; ++m) {
    const int len = days_in_month(m, year);
    for (int d = 1; d <= len; ++d) {
      const CalendarDate date(d, m, year);
      const int oracle = oracle_day_of_week(date).index();
      ++r.dates_checked;
      if (day_of_week(date).index() != oracle) ++r.mismatches;
      if (prev >= 0 && (prev + 1) % 7 != oracle) ++r.progression_breaks;
      prev = oracle;
    }
  }
  return r;
}

// Weekday histogram of day `day` over the months of `year`.
inline std::array<int, Weekday::kCount> year_histogram(int day, int year) {
  std::array<int, Weekday::kCount> h{};
  for (int m = 1; m <= 12; ++m) {
    if (is_admissible(day, m, year)) {
      ++h[static_cast<std::size_t>(day_of_week(CalendarDate(day, m, year)).index())];
    }
  }
  return h;
}

inline std::int64_t reduction_year_mismatches(const AllSequences& seqs, int year) {
  std::int64_t bad = 0;
  const auto y = static_cast<std::size_t>(year);
  for (int d = 1; d <= 28; ++d) {
    const int d_bar = reduce_day(d);
    for (int w = 0; w < Weekday::kCount; ++w) {
      const int via = toeplitz_weekday(d_bar, Weekday::from_index(w)).index();
      if (seqs[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(w)][y] !=
          seqs[0][static_cast<std::size_t>(via)][y]) {
        ++bad;
      }
    }
  }
  return bad;
}

inline std::int64_t periodicity_year_mismatches(int year, std::int64_t& checked) {
  std::int64_t bad = 0;
  for (int m = 1; m <= 12; ++m) {
    const int len = days_in_month(m, year);
    for (int d = 1; d <= len; ++d) {
      ++checked;
      if (day_of_week(CalendarDate(d, m, year)) != day_of_week(CalendarDate(d, m, year + kCycleYears))) {
        ++bad;
      }
    }
  }
  return bad;
}

}  // namespace gregcycle::detail
