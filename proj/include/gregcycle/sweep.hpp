#pragma once

// Whole-cycle brute-force sweeps. Each kernel has a serial reference in
// gregcycle::serial and an OpenMP version in gregcycle::parallel with the
// same signature and bit-identical results.

#include <array>
#include <cstdint>

#include "gregcycle/cycle_stats.hpp"

namespace gregcycle {

// Every M(d, D) for d = 1..31, D = 0..6, indexed [d - 1][D].
using AllSequences = std::array<std::array<YearCounts, Weekday::kCount>, 31>;

struct OracleSweepResult {
  std::int64_t dates_checked = 0;
  std::int64_t mismatches = 0;
  // Count of adjacent admissible dates whose oracle weekdays do not differ by 1.
  std::int64_t progression_breaks = 0;
};

namespace serial {

// Compares day_of_week and oracle_day_of_week on every admissible date of
// years [first_year, last_year].
OracleSweepResult oracle_sweep(int first_year, int last_year);

AllSequences all_sequences();

// Number of (d, D, y) triples, d in 1..28, where M(d, D) differs from
// M(1, toeplitz_weekday(reduce_day(d), D)). Also reports comparisons made.
std::int64_t reduction_mismatches(const AllSequences& seqs, std::int64_t* comparisons = nullptr);

// Dates in years 0..399 whose weekday differs from the same date 400 years on.
std::int64_t periodicity_mismatches(std::int64_t* dates_checked = nullptr);

}  // namespace serial

namespace parallel {

OracleSweepResult oracle_sweep(int first_year, int last_year);
AllSequences all_sequences();
std::int64_t reduction_mismatches(const AllSequences& seqs, std::int64_t* comparisons = nullptr);
std::int64_t periodicity_mismatches(std::int64_t* dates_checked = nullptr);

}  // namespace parallel

}  // namespace gregcycle
