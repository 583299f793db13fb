#pragma once

// Table 3 fixture: the published piece encodings of the 28 basic sequences
// M(i, D), i in {1, 29, 30, 31}, and their verification against brute force.
//
// Fixture format, one cell per line:
//   <day_class> <weekday_index> <encoding_string>
// Blank lines and text after '#' are ignored.

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gregcycle/period28.hpp"

namespace gregcycle {

struct Table3Cell {
  PeriodId period = PeriodId::S1;
  Weekday weekday;
  std::string encoding;
  int line = 0;  // 1-based line in the fixture
};

class FixtureError : public std::runtime_error {
 public:
  FixtureError(int line, const std::string& what) : std::runtime_error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Text of data/table3.txt as compiled into the library.
std::string_view embedded_table3_fixture() noexcept;

// Throws FixtureError on malformed lines, duplicate cells or missing cells.
std::vector<Table3Cell> load_table3(std::istream& in);
std::vector<Table3Cell> load_table3(std::string_view text);
std::vector<Table3Cell> embedded_table3();

struct CellReport {
  Table3Cell cell;
  bool parsed = false;
  std::string parse_error;  // set when !parsed
  bool matches = false;
  std::optional<int> first_mismatch;  // year index
  int mismatch_count = 0;
  // Greedy encoder output for the brute-force sequence; diagnostic only.
  std::string greedy_encoding;
  bool greedy_agrees = false;
};

struct Table3Report {
  std::vector<CellReport> cells;

  int passed() const;
  bool all_pass() const { return passed() == static_cast<int>(cells.size()); }
};

// Decodes each cell (lenient parse) and compares with multiplicity_sequence.
// Cells are independent and are checked in parallel.
Table3Report verify_table3(const std::vector<Table3Cell>& cells);

}  // namespace gregcycle
