#pragma once

// Text emitters for the CLI. Every table is available as CSV, JSON and
// Markdown with identical cell values. JSON output is an object with a
// "meta" block describing the table and a row-major "data" block.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gregcycle/cycle_stats.hpp"
#include "gregcycle/table3.hpp"
#include "gregcycle/verify.hpp"

namespace gregcycle {

enum class ReportFormat { Csv, Json, Markdown };

// Accepts "csv", "json", "md" and "markdown".
std::optional<ReportFormat> parse_report_format(std::string_view s) noexcept;

std::string render_table1(const OccurrenceTable& table, ReportFormat fmt);
std::string render_table2(ReportFormat fmt);
std::string render_table3(const std::vector<Table3Cell>& cells, ReportFormat fmt);
std::string render_sequence(const MultiplicitySequence& seq, ReportFormat fmt);
// Decoded values with the encoding they came from.
std::string render_decoded(PeriodId period, const PieceEncoding& enc, const YearCounts& values,
                           ReportFormat fmt);
std::string render_verify(const std::vector<SuiteResult>& results);

}  // namespace gregcycle
