#pragma once

// Verification suites run by `gregcycle verify` and the acceptance binary.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "gregcycle/table3.hpp"

namespace gregcycle {

// Published reference values the suites compare against.
namespace published {

extern const std::array<std::array<int, Weekday::kCount>, OccurrenceTable::kRows> kTable1;
extern const std::array<std::array<int, Weekday::kCount>, 7> kTable2;
// Indexed in kAllPeriods order: S1, S29, S30, S31.
extern const std::array<std::array<int, kPeriod>, 4> kPeriods;

const std::array<int, kPeriod>& period(PeriodId id);

}  // namespace published

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> details;
};

inline constexpr std::array<std::string_view, 9> kSuiteNames = {
    "oracle", "cycle", "table1", "table2", "periods", "table3", "reduction", "roundtrip", "periodicity"};

bool is_suite_name(std::string_view name);

// Runs one named suite. The Table 3 suite uses `fixture`.
SuiteResult run_suite(std::string_view name, const std::vector<Table3Cell>& fixture);

std::vector<SuiteResult> run_all_suites(const std::vector<Table3Cell>& fixture);

}  // namespace gregcycle
