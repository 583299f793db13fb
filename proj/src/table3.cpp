#include "gregcycle/table3.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace gregcycle {

std::vector<Table3Cell> load_table3(std::istream& in) {
  std::vector<Table3Cell> cells;
  std::set<std::pair<int, int>> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    int day_class = 0;
    int weekday = 0;
    if (!(ls >> day_class)) {
      if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw FixtureError(line_no, "line " + std::to_string(line_no) + ": expected day class");
    }
    if (!(ls >> weekday)) {
      throw FixtureError(line_no, "line " + std::to_string(line_no) + ": expected weekday index");
    }
    std::string encoding;
    std::getline(ls >> std::ws, encoding);
    while (!encoding.empty() && std::isspace(static_cast<unsigned char>(encoding.back()))) {
      encoding.pop_back();
    }
    if (encoding.empty()) {
      throw FixtureError(line_no, "line " + std::to_string(line_no) + ": missing encoding");
    }
    Table3Cell cell;
    try {
      cell.period = period_id_from_int(day_class);
      cell.weekday = Weekday::from_index(weekday);
    } catch (const std::domain_error& e) {
      throw FixtureError(line_no, "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!seen.emplace(day_class, weekday).second) {
      throw FixtureError(line_no, "line " + std::to_string(line_no) + ": duplicate cell (" +
                                      std::to_string(day_class) + ", " + std::to_string(weekday) + ")");
    }
    cell.encoding = std::move(encoding);
    cell.line = line_no;
    cells.push_back(std::move(cell));
  }
  if (cells.size() != kAllPeriods.size() * Weekday::kCount) {
    throw FixtureError(line_no, "fixture has " + std::to_string(cells.size()) + " cells, expected 28");
  }
  return cells;
}

std::vector<Table3Cell> load_table3(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_table3(in);
}

std::vector<Table3Cell> embedded_table3() { return load_table3(embedded_table3_fixture()); }

int Table3Report::passed() const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const CellReport& c) { return c.matches; }));
}

Table3Report verify_table3(const std::vector<Table3Cell>& cells) {
  Table3Report report;
  report.cells.resize(cells.size());
  const auto n = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const Table3Cell& cell = cells[static_cast<std::size_t>(i)];
    CellReport& out = report.cells[static_cast<std::size_t>(i)];
    out.cell = cell;
    const PeriodSequence seq = extract_period(cell.period);
    const YearCounts truth = multiplicity_sequence(to_int(cell.period), cell.weekday).counts;

    out.greedy_encoding = serialize_encoding(encode(seq, truth));
    try {
      const PieceEncoding enc = parse_encoding(cell.encoding, ParseMode::Lenient);
      out.parsed = true;
      out.greedy_agrees = out.greedy_encoding == serialize_encoding(enc);
      const YearCounts decoded = decode(seq, enc);
      for (int y = 0; y < kCycleYears; ++y) {
        if (decoded[static_cast<std::size_t>(y)] != truth[static_cast<std::size_t>(y)]) {
          if (!out.first_mismatch) out.first_mismatch = y;
          ++out.mismatch_count;
        }
      }
      out.matches = out.mismatch_count == 0;
    } catch (const EncodingError& e) {
      out.parse_error = e.what();
    }
  }
  return report;
}

}  // namespace gregcycle
