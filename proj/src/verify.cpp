#include "gregcycle/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gregcycle/sweep.hpp"

namespace gregcycle {

namespace published {

const std::array<std::array<int, Weekday::kCount>, OccurrenceTable::kRows> kTable1 = {{
    {688, 684, 687, 685, 685, 687, 684},
    {684, 688, 684, 687, 685, 685, 687},
    {687, 684, 688, 684, 687, 685, 685},
    {685, 687, 684, 688, 684, 687, 685},
    {685, 685, 687, 684, 688, 684, 687},
    {687, 685, 685, 687, 684, 688, 684},
    {684, 687, 685, 685, 687, 684, 688},
    {644, 641, 644, 642, 642, 643, 641},
    {627, 631, 626, 631, 627, 629, 629},
    {400, 399, 401, 398, 402, 399, 401},
}};

const std::array<std::array<int, Weekday::kCount>, 7> kTable2 = {{
    {0, 1, 2, 3, 4, 5, 6},
    {6, 0, 1, 2, 3, 4, 5},
    {5, 6, 0, 1, 2, 3, 4},
    {4, 5, 6, 0, 1, 2, 3},
    {3, 4, 5, 6, 0, 1, 2},
    {2, 3, 4, 5, 6, 0, 1},
    {1, 2, 3, 4, 5, 6, 0},
}};

const std::array<std::array<int, kPeriod>, 4> kPeriods = {{
    {1, 2, 2, 1, 2, 1, 2, 2, 1, 3, 1, 1, 3, 2, 1, 3, 1, 2, 2, 2, 2, 1, 1, 2, 2, 1, 3, 1},
    {1, 2, 2, 1, 2, 1, 2, 2, 1, 2, 1, 1, 3, 2, 1, 2, 1, 2, 2, 2, 2, 1, 1, 2, 2, 1, 2, 1},
    {3, 2, 1, 2, 1, 2, 2, 2, 2, 1, 1, 2, 2, 1, 2, 1, 1, 2, 2, 1, 1, 1, 2, 2, 1, 2, 1, 1},
    {1, 0, 1, 1, 1, 1, 1, 0, 1, 1, 2, 1, 0, 1, 1, 1, 2, 1, 0, 1, 1, 2, 1, 1, 1, 1, 1, 2},
}};

const std::array<int, kPeriod>& period(PeriodId id) {
  const auto it = std::find(kAllPeriods.begin(), kAllPeriods.end(), id);
  return kPeriods[static_cast<std::size_t>(it - kAllPeriods.begin())];
}

}  // namespace published

namespace {

std::string cell_name(PeriodId p, Weekday w) {
  return "(d=" + std::to_string(to_int(p)) + ", " + std::string(w.abbrev()) + ")";
}

template <class T>
void expect_eq(SuiteResult& r, const std::string& what, const T& got, const T& want) {
  if (got == want) return;
  r.passed = false;
  r.details.push_back(what + ": got " + std::to_string(got) + ", expected " + std::to_string(want));
}

SuiteResult oracle_suite() {
  SuiteResult r{"oracle", true, {}};
  const OracleSweepResult s = parallel::oracle_sweep(0, 2 * kCycleYears - 1);
  expect_eq<std::int64_t>(r, "dates checked in years 0..799", s.dates_checked, 2LL * kCycleDays);
  expect_eq<std::int64_t>(r, "formula/oracle mismatches", s.mismatches, 0);
  expect_eq<std::int64_t>(r, "weekday progression breaks", s.progression_breaks, 0);
  expect_eq(r, "weekday of 1582-10-15", day_of_week(CalendarDate(15, 10, 1582)).index(), 5);
  r.details.push_back(std::to_string(s.dates_checked) + " dates compared");
  return r;
}

SuiteResult cycle_suite() {
  SuiteResult r{"cycle", true, {}};
  int leaps = 0;
  int days = 0;
  for (int y = 0; y < kCycleYears; ++y) {
    leaps += is_leap(y) ? 1 : 0;
    for (int m = 1; m <= 12; ++m) days += days_in_month(m, y);
  }
  expect_eq(r, "leap years in 0..399", leaps, kLeapYearsPerCycle);
  expect_eq(r, "days in cycle", days, kCycleDays);
  expect_eq(r, "days in cycle mod 7", days % 7, 0);
  expect_eq<std::int64_t>(r, "oracle days in cycle", oracle_day_number(CalendarDate(1, 1, 400)), kCycleDays);

  const AllSequences seqs = parallel::all_sequences();
  const auto total = [&](int d) {
    int t = 0;
    for (const YearCounts& c : seqs[static_cast<std::size_t>(d - 1)]) t += std::accumulate(c.begin(), c.end(), 0);
    return t;
  };
  for (int d = 1; d <= 28; ++d) expect_eq(r, "occurrences of day " + std::to_string(d), total(d), 4800);
  expect_eq(r, "occurrences of day 29", total(29), 4497);
  expect_eq(r, "occurrences of day 30", total(30), 4400);
  expect_eq(r, "occurrences of day 31", total(31), 2800);

  // Per-year month counts for each day.
  for (int d = 1; d <= 31; ++d) {
    for (int y = 0; y < kCycleYears; ++y) {
      int s = 0;
      for (const YearCounts& c : seqs[static_cast<std::size_t>(d - 1)]) s += c[static_cast<std::size_t>(y)];
      const int want = d <= 28 ? 12 : d == 29 ? 11 + (is_leap(y) ? 1 : 0) : d == 30 ? 11 : 7;
      if (s != want) {
        expect_eq(r, "months with day " + std::to_string(d) + " in year " + std::to_string(y), s, want);
      }
    }
  }
  return r;
}

SuiteResult table1_suite() {
  SuiteResult r{"table1", true, {}};
  const OccurrenceTable t = occurrence_table();
  for (int row = 0; row < OccurrenceTable::kRows; ++row) {
    for (int w = 0; w < Weekday::kCount; ++w) {
      expect_eq(r, "cell [" + OccurrenceTable::row_label(row) + "][" +
                       std::string(Weekday::from_index(w).abbrev()) + "]",
                t.cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(w)],
                published::kTable1[static_cast<std::size_t>(row)][static_cast<std::size_t>(w)]);
    }
  }
  // Rows 1..7: symmetric Toeplitz with 688 exactly on the diagonal.
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      const int a = t.cells[i][j];
      if (a != t.cells[j][i] || a != t.cells[0][(j - i + 7) % 7] || (a == 688) != (i == j)) {
        r.passed = false;
        r.details.push_back("Toeplitz/diagonal property fails at (" + std::to_string(i + 1) + ", " +
                            std::to_string(j) + ")");
      }
    }
  }
  const auto argmax = [&](int day) {
    const auto& row = t.row_for(day);
    const int mx = *std::max_element(row.begin(), row.end());
    std::vector<int> at;
    for (int w = 0; w < Weekday::kCount; ++w) {
      if (row[static_cast<std::size_t>(w)] == mx) at.push_back(w);
    }
    return std::pair{mx, at};
  };
  const auto check_max = [&](int day, int mx, std::vector<int> at) {
    if (argmax(day) != std::pair{mx, at}) {
      r.passed = false;
      r.details.push_back("maximum of row " + std::to_string(day) + " is not " + std::to_string(mx) +
                          " at the published weekdays");
    }
  };
  check_max(29, 644, {0, 2});
  check_max(30, 631, {1, 3});
  check_max(31, 402, {4});
  return r;
}

SuiteResult table2_suite() {
  SuiteResult r{"table2", true, {}};
  for (int d_bar = 1; d_bar <= 7; ++d_bar) {
    for (int w = 0; w < Weekday::kCount; ++w) {
      expect_eq(r, "T7(" + std::to_string(d_bar) + ", " + std::to_string(w) + ")",
                toeplitz_weekday(d_bar, Weekday::from_index(w)).index(),
                published::kTable2[static_cast<std::size_t>(d_bar - 1)][static_cast<std::size_t>(w)]);
    }
  }
  // Worked example: M(17, 4) = M(3, 4) = M(1, 2).
  expect_eq(r, "T7(reduce(17), 4)", toeplitz_weekday(reduce_day(17), weekdays::Thursday).index(), 2);
  return r;
}

SuiteResult periods_suite() {
  SuiteResult r{"periods", true, {}};
  for (PeriodId id : kAllPeriods) {
    const PeriodSequence s = extract_period(id);
    if (s.entries != published::period(id)) {
      r.passed = false;
      for (int i = 0; i < kPeriod; ++i) {
        if (s.entries[static_cast<std::size_t>(i)] != published::period(id)[static_cast<std::size_t>(i)]) {
          r.details.push_back("S" + std::to_string(to_int(id)) + " differs first at index " + std::to_string(i));
          break;
        }
      }
    }
  }
  return r;
}

SuiteResult table3_suite(const std::vector<Table3Cell>& fixture) {
  SuiteResult r{"table3", true, {}};
  const Table3Report rep = verify_table3(fixture);
  for (const CellReport& c : rep.cells) {
    const std::string name = cell_name(c.cell.period, c.cell.weekday);
    if (!c.parsed) {
      r.passed = false;
      r.details.push_back(name + " " + c.cell.encoding + ": " + c.parse_error);
    } else if (!c.matches) {
      r.passed = false;
      r.details.push_back(name + " " + c.cell.encoding + ": first mismatch at index " +
                          std::to_string(*c.first_mismatch) + " (" + std::to_string(c.mismatch_count) +
                          " of 400 differ); greedy encoding " + c.greedy_encoding + " round-trips");
    } else if (!c.greedy_agrees) {
      r.details.push_back(name + ": greedy encoder diverges (" + c.greedy_encoding + "), not a failure");
    }
  }
  r.details.push_back(std::to_string(rep.passed()) + "/" + std::to_string(rep.cells.size()) +
                      " cells decode to the brute-force sequence");
  return r;
}

SuiteResult reduction_suite() {
  SuiteResult r{"reduction", true, {}};
  std::int64_t comparisons = 0;
  const std::int64_t bad = parallel::reduction_mismatches(parallel::all_sequences(), &comparisons);
  expect_eq<std::int64_t>(r, "comparisons", comparisons, 78400);
  expect_eq<std::int64_t>(r, "reduction identity mismatches", bad, 0);
  return r;
}

SuiteResult roundtrip_suite() {
  SuiteResult r{"roundtrip", true, {}};
  for (PeriodId id : kAllPeriods) {
    const PeriodSequence s = extract_period(id);
    for (int w = 0; w < Weekday::kCount; ++w) {
      const Weekday wd = Weekday::from_index(w);
      const YearCounts truth = multiplicity_sequence(to_int(id), wd).counts;
      const PieceEncoding enc = encode(s, truth);
      if (decode(s, enc) != truth) {
        r.passed = false;
        r.details.push_back(cell_name(id, wd) + ": encode/decode does not round-trip");
      }
      if (id == PeriodId::S1 && wd == weekdays::Tuesday) {
        const std::string got = serialize_encoding(enc);
        const std::string want = "(4)100(17)101(17)102(17)97";
        r.details.push_back(got == want ? "M(1,2) encodes to " + got
                                        : "M(1,2) greedy divergence: " + got + " vs " + want);
      }
    }
  }
  return r;
}

SuiteResult periodicity_suite() {
  SuiteResult r{"periodicity", true, {}};
  std::int64_t checked = 0;
  expect_eq<std::int64_t>(r, "dates differing from y+400", parallel::periodicity_mismatches(&checked), 0);
  expect_eq<std::int64_t>(r, "dates checked", checked, kCycleDays);
  return r;
}

}  // namespace

bool is_suite_name(std::string_view name) {
  return std::find(kSuiteNames.begin(), kSuiteNames.end(), name) != kSuiteNames.end();
}

SuiteResult run_suite(std::string_view name, const std::vector<Table3Cell>& fixture) {
  if (name == "oracle") return oracle_suite();
  if (name == "cycle") return cycle_suite();
  if (name == "table1") return table1_suite();
  if (name == "table2") return table2_suite();
  if (name == "periods") return periods_suite();
  if (name == "table3") return table3_suite(fixture);
  if (name == "reduction") return reduction_suite();
  if (name == "roundtrip") return roundtrip_suite();
  if (name == "periodicity") return periodicity_suite();
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::vector<SuiteResult> run_all_suites(const std::vector<Table3Cell>& fixture) {
  std::vector<SuiteResult> out;
  for (std::string_view n : kSuiteNames) out.push_back(run_suite(n, fixture));
  return out;
}

}  // namespace gregcycle
