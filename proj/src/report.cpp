#include "gregcycle/report.hpp"

#include <sstream>

#include "json.hpp"

namespace gregcycle {

namespace {

using nlohmann::json;

// A rectangular table of integer cells with row labels.
struct Grid {
  std::string corner;
  std::vector<std::string> columns;
  std::vector<std::string> row_labels;
  std::vector<std::vector<int>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string grid_csv(const Grid& g) {
  std::ostringstream os;
  os << csv_field(g.corner);
  for (const auto& c : g.columns) os << ',' << csv_field(c);
  os << '\n';
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    os << csv_field(g.row_labels[r]);
    for (int v : g.rows[r]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

std::string grid_markdown(const Grid& g) {
  std::ostringstream os;
  os << "| " << g.corner << " |";
  for (const auto& c : g.columns) os << ' ' << c << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < g.columns.size(); ++i) os << "---:|";
  os << '\n';
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    os << "| " << g.row_labels[r] << " |";
    for (int v : g.rows[r]) os << ' ' << v << " |";
    os << '\n';
  }
  return os.str();
}

std::string grid_json(const Grid& g, json meta) {
  meta["columns"] = g.columns;
  meta["row_labels"] = g.row_labels;
  json doc;
  doc["meta"] = std::move(meta);
  doc["data"] = g.rows;
  return doc.dump(2) + "\n";
}

std::string render_grid(const Grid& g, ReportFormat fmt, json meta) {
  switch (fmt) {
    case ReportFormat::Csv: return grid_csv(g);
    case ReportFormat::Markdown: return grid_markdown(g);
    case ReportFormat::Json: return grid_json(g, std::move(meta));
  }
  return {};
}

std::vector<std::string> weekday_abbrevs() {
  std::vector<std::string> out;
  for (int w = 0; w < Weekday::kCount; ++w) out.emplace_back(Weekday::from_index(w).abbrev());
  return out;
}

// One value per year, used by seq and decode.
std::string render_year_values(const YearCounts& values, ReportFormat fmt, json meta) {
  std::ostringstream os;
  switch (fmt) {
    case ReportFormat::Csv:
      for (const auto& [k, v] : meta.items()) {
        os << "# " << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
      os << "year,count\n";
      for (int y = 0; y < kCycleYears; ++y) os << y << ',' << values[static_cast<std::size_t>(y)] << '\n';
      return os.str();
    case ReportFormat::Markdown:
      for (const auto& [k, v] : meta.items()) {
        os << "- " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
      os << "\n| year | count |\n|---:|---:|\n";
      for (int y = 0; y < kCycleYears; ++y) {
        os << "| " << y << " | " << values[static_cast<std::size_t>(y)] << " |\n";
      }
      return os.str();
    case ReportFormat::Json: {
      json doc;
      doc["meta"] = std::move(meta);
      doc["data"] = values;
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view s) noexcept {
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json") return ReportFormat::Json;
  if (s == "md" || s == "markdown") return ReportFormat::Markdown;
  return std::nullopt;
}

std::string render_table1(const OccurrenceTable& table, ReportFormat fmt) {
  Grid g{"d\\D", weekday_abbrevs(), {}, {}};
  for (int r = 0; r < OccurrenceTable::kRows; ++r) {
    g.row_labels.push_back(OccurrenceTable::row_label(r));
    const auto& row = table.cells[static_cast<std::size_t>(r)];
    g.rows.emplace_back(row.begin(), row.end());
  }
  return render_grid(g, fmt,
                     {{"table", "Table 1"},
                      {"title", "Occurrences of day of month d on weekday D per 400-year Gregorian cycle"},
                      {"cycle_years", kCycleYears}});
}

std::string render_table2(ReportFormat fmt) {
  Grid g{"d_bar\\D", {}, {}, {}};
  for (int w = 0; w < Weekday::kCount; ++w) g.columns.push_back(std::to_string(w));
  for (int d_bar = 1; d_bar <= 7; ++d_bar) {
    g.row_labels.push_back(std::to_string(d_bar));
    std::vector<int> row;
    for (int w = 0; w < Weekday::kCount; ++w) row.push_back(toeplitz_weekday(d_bar, Weekday::from_index(w)).index());
    g.rows.push_back(std::move(row));
  }
  return render_grid(g, fmt,
                     {{"table", "Table 2"},
                      {"title", "T7(d_bar, D) with M(d, D) = M(1, T7(d_bar, D)) for d in 1..28"},
                      {"formula", "(D + 1 - d_bar) mod 7"}});
}

std::string render_table3(const std::vector<Table3Cell>& cells, ReportFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case ReportFormat::Csv:
      os << "day_class,weekday,encoding\n";
      for (const auto& c : cells) os << to_int(c.period) << ',' << c.weekday.index() << ',' << c.encoding << '\n';
      return os.str();
    case ReportFormat::Markdown:
      os << "| D | d=1 | d=29 | d=30 | d=31 |\n|---|---|---|---|---|\n";
      for (int w = 0; w < Weekday::kCount; ++w) {
        os << "| " << Weekday::from_index(w).name() << " (" << w << ") |";
        for (PeriodId p : kAllPeriods) {
          std::string enc;
          for (const auto& c : cells) {
            if (c.period == p && c.weekday.index() == w) enc = c.encoding;
          }
          os << ' ' << enc << " |";
        }
        os << '\n';
      }
      return os.str();
    case ReportFormat::Json: {
      json data = json::array();
      for (const auto& c : cells) {
        data.push_back({{"day_class", to_int(c.period)}, {"weekday", c.weekday.index()}, {"encoding", c.encoding}});
      }
      json periods = json::object();
      for (PeriodId p : kAllPeriods) periods["S" + std::to_string(to_int(p))] = extract_period(p).entries;
      json doc;
      doc["meta"] = {{"table", "Table 3"},
                     {"title", "Piece encodings of M(i, D) over the period-28 sequences"},
                     {"periods", periods}};
      doc["data"] = std::move(data);
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::string render_sequence(const MultiplicitySequence& seq, ReportFormat fmt) {
  return render_year_values(seq.counts, fmt,
                            {{"sequence", "M(" + std::to_string(seq.day) + "," +
                                              std::to_string(seq.weekday.index()) + ")"},
                             {"day", seq.day},
                             {"weekday", seq.weekday.index()},
                             {"weekday_name", std::string(seq.weekday.name())},
                             {"total", seq.total()}});
}

std::string render_decoded(PeriodId period, const PieceEncoding& enc, const YearCounts& values,
                           ReportFormat fmt) {
  int total = 0;
  for (int v : values) total += v;
  return render_year_values(values, fmt,
                            {{"period", "S" + std::to_string(to_int(period))},
                             {"encoding", serialize_encoding(enc)},
                             {"total", total}});
}

std::string render_verify(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  int passed = 0;
  for (const SuiteResult& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
    for (const std::string& d : r.details) os << "    " << d << '\n';
    passed += r.passed ? 1 : 0;
  }
  os << passed << '/' << results.size() << " suites passed\n";
  return os.str();
}

}  // namespace gregcycle
