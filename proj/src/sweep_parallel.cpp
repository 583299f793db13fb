#include "gregcycle/sweep.hpp"

#include "sweep_kernels.hpp"

namespace gregcycle::parallel {

OracleSweepResult oracle_sweep(int first_year, int last_year) {
  std::int64_t checked = 0;
  std::int64_t mismatches = 0;
  std::int64_t breaks = 0;
#pragma omp parallel for schedule(static) reduction(+ : checked, mismatches, breaks)
  for (int y = first_year; y <= last_year; ++y) {
    const OracleSweepResult r = detail::oracle_year(y, y > first_year);
    checked += r.dates_checked;
    mismatches += r.mismatches;
    breaks += r.progression_breaks;
  }
  return {checked, mismatches, breaks};
}

AllSequences all_sequences() {
  AllSequences out{};
  // One (day, year) cell writes a disjoint slice of `out`.
#pragma omp parallel for collapse(2) schedule(static)
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
#pragma omp parallel for schedule(static) reduction(+ : bad)
  for (int y = 0; y < kCycleYears; ++y) bad += detail::reduction_year_mismatches(seqs, y);
  if (comparisons) *comparisons = 28LL * Weekday::kCount * kCycleYears;
  return bad;
}

std::int64_t periodicity_mismatches(std::int64_t* dates_checked) {
  std::int64_t bad = 0;
  std::int64_t checked = 0;
#pragma omp parallel for schedule(static) reduction(+ : bad, checked)
  for (int y = 0; y < kCycleYears; ++y) {
    std::int64_t local = 0;
    bad += detail::periodicity_year_mismatches(y, local);
    checked += local;
  }
  if (dates_checked) *dates_checked = checked;
  return bad;
}

}  // namespace gregcycle::parallel
