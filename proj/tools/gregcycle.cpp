// gregcycle: weekday statistics of the 400-year Gregorian cycle.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gregcycle/calendar.hpp"
#include "gregcycle/clock_svg.hpp"
#include "gregcycle/cycle_stats.hpp"
#include "gregcycle/period28.hpp"
#include "gregcycle/report.hpp"
#include "gregcycle/table3.hpp"
#include "gregcycle/verify.hpp"

namespace {

using namespace gregcycle;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "csv";
  std::string out;
  int day = 1;
  std::string weekday = "0";
  int period = 1;
  bool strict = false;
  std::string encoding;
  std::string suite;
  std::string fixture;
  double radius = 200.0;
  bool no_indices = false;
};

ReportFormat format_of(const Options& o) {
  if (auto f = parse_report_format(o.format)) return *f;
  throw UsageError("unknown format '" + o.format + "' (expected csv, json or md)");
}

Weekday weekday_of(const Options& o) {
  int idx = 0;
  const auto* first = o.weekday.data();
  const auto* last = first + o.weekday.size();
  if (auto [p, ec] = std::from_chars(first, last, idx); ec == std::errc{} && p == last) {
    if (idx < 0 || idx >= Weekday::kCount) throw UsageError("--weekday must be in 0..6");
    return Weekday::from_index(idx);
  }
  if (auto w = Weekday::from_name(o.weekday)) return *w;
  throw UsageError("unrecognised weekday '" + o.weekday + "'");
}

int day_of(const Options& o) {
  if (o.day < 1 || o.day > 31) throw UsageError("--day must be in 1..31");
  return o.day;
}

PeriodId period_of(const Options& o) {
  try {
    return period_id_from_int(o.period);
  } catch (const std::domain_error&) {
    throw UsageError("--period must be one of 1, 29, 30, 31");
  }
}

std::vector<Table3Cell> fixture_of(const Options& o) {
  if (o.fixture.empty()) return embedded_table3();
  std::ifstream in(o.fixture);
  if (!in) throw UsageError("cannot open fixture '" + o.fixture + "'");
  try {
    return load_table3(in);
  } catch (const FixtureError& e) {
    throw UsageError(o.fixture + ": " + e.what());
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write '" + o.out + "'");
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format: csv, json or md")->capture_default_str();
}

void add_out(CLI::App* cmd, Options& o) { cmd->add_option("--out", o.out, "Write to PATH instead of stdout"); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weekday statistics of the 400-year Gregorian cycle and their period-28 encodings",
               "gregcycle"};
  app.require_subcommand(1);
  Options o;

  auto* table1 = app.add_subcommand("table1", "Occurrences of each day of month on each weekday");
  add_format(table1, o);
  add_out(table1, o);

  auto* table2 = app.add_subcommand("table2", "Weekday index map T7(d_bar, D) of the reduction identity");
  add_format(table2, o);
  add_out(table2, o);

  auto* table3 = app.add_subcommand("table3", "Piece encodings of the 28 basic sequences");
  add_format(table3, o);
  add_out(table3, o);
  table3->add_option("--fixture", o.fixture, "Fixture file to list instead of the built-in one");

  auto* seq = app.add_subcommand("seq", "Multiplicity sequence M(day, weekday) for years 0..399");
  add_format(seq, o);
  add_out(seq, o);
  seq->add_option("--day", o.day, "Day of month 1..31")->required();
  seq->add_option("--weekday", o.weekday, "Weekday 0..6 (0 = Sunday) or name")->required();

  auto* enc = app.add_subcommand("encode", "Greedy piece encoding of M(day, weekday)");
  add_out(enc, o);
  enc->add_option("--day", o.day, "Day of month 1..31")->required();
  enc->add_option("--weekday", o.weekday, "Weekday 0..6 (0 = Sunday) or name")->required();

  auto* dec = app.add_subcommand("decode", "Expand a piece encoding into 400 values");
  add_format(dec, o);
  add_out(dec, o);
  dec->add_option("--period", o.period, "Period sequence: 1, 29, 30 or 31")->required();
  dec->add_option("encoding", o.encoding, "Encoding such as (4)100(17)101(17)102(17)97")->required();
  dec->add_flag("--strict", o.strict, "Reject a parenthesised final length");

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  add_out(verify, o);
  verify->add_option("--suite", o.suite, "Run only this suite");
  verify->add_option("--fixture", o.fixture, "Table 3 fixture file to verify instead of the built-in one");

  auto* clock = app.add_subcommand("clock", "SVG clock figure of a period-28 sequence");
  add_out(clock, o);
  clock->add_option("--period", o.period, "Period sequence: 1, 29, 30 or 31")->required();
  clock->add_option("--radius", o.radius, "Clock radius in pixels")->capture_default_str();
  clock->add_flag("--no-indices", o.no_indices, "Omit index labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table1) {
      emit(o, render_table1(occurrence_table(), format_of(o)));
    } else if (*table2) {
      emit(o, render_table2(format_of(o)));
    } else if (*table3) {
      emit(o, render_table3(fixture_of(o), format_of(o)));
    } else if (*seq) {
      emit(o, render_sequence(multiplicity_sequence(day_of(o), weekday_of(o)), format_of(o)));
    } else if (*enc) {
      const int d = day_of(o);
      const MultiplicitySequence m = multiplicity_sequence(d, weekday_of(o));
      emit(o, serialize_encoding(encode(extract_period(period_for_day(d)), m.counts)) + "\n");
    } else if (*dec) {
      const PeriodId p = period_of(o);
      const ReportFormat fmt = format_of(o);
      const PieceEncoding e = parse_encoding(o.encoding, o.strict ? ParseMode::Strict : ParseMode::Lenient);
      emit(o, render_decoded(p, e, decode(extract_period(p), e), fmt));
    } else if (*verify) {
      const auto fixture = fixture_of(o);
      std::vector<SuiteResult> results;
      if (o.suite.empty()) {
        results = run_all_suites(fixture);
      } else if (is_suite_name(o.suite)) {
        results.push_back(run_suite(o.suite, fixture));
      } else {
        throw UsageError("unknown suite '" + o.suite + "'");
      }
      emit(o, render_verify(results));
      for (const auto& r : results) {
        if (!r.passed) return kExitVerifyFailed;
      }
    } else if (*clock) {
      if (!(o.radius > 0.0)) throw UsageError("--radius must be positive");
      emit(o, render_clock_svg({period_of(o), o.radius, !o.no_indices}));
    }
  } catch (const UsageError& e) {
    std::cerr << "gregcycle: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EncodingError& e) {
    std::cerr << "gregcycle: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "gregcycle: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
