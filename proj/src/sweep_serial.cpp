#include "gregcycle/sweep.hpp"

#include "sweep_kernels.hpp"

namespace gregcycle::serial {

OracleSweepResult oracle_sweep(int first_year, int last_year) {
  OracleSweepResult total;
  for (int y = first_year; y <= last_year; ++y) {
    const OracleSweepResult r = detail::oracle_year(y, y > first_year);
    total.dates_checked += r.dates_checked;
    total.mismatches += r.mismatches;
    total.progression_breaks += r.progression_breaks;
  }
  return total;
}

AllSequences all_sequences() {
  AllSequences out{};
  for (int d = 1; d <= 31; ++d) {
    for (int y = 0; y < kCycleYears; ++y) {
      const auto h = detail::year_histogram(d, y);
      for (int w = 0; w < Weekday::kCount; ++w) {
        out[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(w)][static_cast<std::size_t>(y)] =
            h[static_cast<std::size_t>(w)];
      }
    }
  }
  return out;
}

std::int64_t reduction_mismatches(const AllSequences& seqs, std::int64_t* comparisons) {
  std::int64_t bad = 0;
  for (int y = 0; y < kCycleYears; ++y) bad += detail::reduction_year_mismatches(seqs, y);
  if (comparisons) *comparisons = 28LL * Weekday::kCount * kCycleYears;
  return bad;
}

std::int64_t periodicity_mismatches(std::int64_t* dates_checked) {
  std::int64_t bad = 0;
  std::int64_t checked = 0;
  for (int y = 0; y < kCycleYears; ++y) bad += detail::periodicity_year_mismatches(y, checked);
  if (dates_checked) *dates_checked = checked;
  return bad;
}

}  // namespace gregcycle::serial
