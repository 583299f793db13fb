#include "gregcycle/cycle_stats.hpp"

#include <numeric>
#include <stdexcept>

#include "gregcycle/sweep.hpp"

namespace gregcycle {

int MultiplicitySequence::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

MultiplicitySequence multiplicity_sequence(int day, Weekday weekday) {
  if (day < 1 || day > 31) {
    throw std::domain_error("day of month out of range 1..31: " + std::to_string(day));
  }
  MultiplicitySequence seq{day, weekday, {}};
  for (int y = 0; y < kCycleYears; ++y) {
    int n = 0;
    for (int m = 1; m <= 12; ++m) {
      if (is_admissible(day, m, y) && day_of_week(CalendarDate(day, m, y)) == weekday) ++n;
    }
    seq.counts[static_cast<std::size_t>(y)] = n;
  }
  return seq;
}

int reduce_day(int day) {
  if (day < 1 || day > 28) {
    throw std::domain_error("day outside 1..28 has no weekday class: " + std::to_string(day));
  }
  return day % 7 == 0 ? 7 : day % 7;
}

Weekday toeplitz_weekday(int d_bar, Weekday weekday) {
  if (d_bar < 1 || d_bar > 7) {
    throw std::domain_error("day class out of range 1..7: " + std::to_string(d_bar));
  }
  return Weekday::from_index((weekday.index() + 1 - d_bar + 7) % 7);
}

std::string OccurrenceTable::row_label(int row) {
  if (row < 0 || row >= kRows) throw std::out_of_range("occurrence table row");
  const int d = kRowDays[static_cast<std::size_t>(row)];
  if (d > 7) return std::to_string(d);
  return std::to_string(d) + " (" + std::to_string(d + 7) + "," + std::to_string(d + 14) + "," +
         std::to_string(d + 21) + ")";
}

int OccurrenceTable::row_of(int day_class) {
  for (int r = 0; r < kRows; ++r) {
    if (kRowDays[static_cast<std::size_t>(r)] == day_class) return r;
  }
  throw std::domain_error("no occurrence row for day " + std::to_string(day_class));
}

int OccurrenceTable::row_sum(int row) const {
  const auto& r = cells.at(static_cast<std::size_t>(row));
  return std::accumulate(r.begin(), r.end(), 0);
}

OccurrenceTable occurrence_table() {
  const AllSequences seqs = parallel::all_sequences();
  OccurrenceTable t;
  for (int r = 0; r < OccurrenceTable::kRows; ++r) {
    const int d = OccurrenceTable::kRowDays[static_cast<std::size_t>(r)];
    for (int w = 0; w < Weekday::kCount; ++w) {
      const YearCounts& c = seqs[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(w)];
      t.cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(w)] =
          std::accumulate(c.begin(), c.end(), 0);
    }
  }
  return t;
}

}  // namespace gregcycle
