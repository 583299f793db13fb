// Black-box tests of the gregcycle executable.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

// Runs the CLI with `args` (already shell-quoted); stderr is merged into out
// when merge_stderr is set.
CliRun run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string("\"") + GREGCYCLE_CLI + "\" " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<int> year_values_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<int> v;
  bool body = false;
  while (std::getline(in, line)) {
    if (line == "year,count") {
      body = true;
    } else if (body) {
      v.push_back(std::stoi(line.substr(line.find(',') + 1)));
    }
  }
  return v;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gregcycle_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, Table1Csv) {
  const CliRun r = run("table1");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"1 (8,15,22)\",688,"), std::string::npos);
  EXPECT_NE(r.out.find("\n30,627,631,626,"), std::string::npos);
}

TEST(Cli, Table1JsonMatchesCsv) {
  const auto doc = nlohmann::json::parse(run("table1 --format json").out);
  EXPECT_EQ(doc.at("data")[8][2], 626);
  EXPECT_EQ(doc.at("data")[0][0], 688);
}

TEST(Cli, Table2AndTable3) {
  EXPECT_NE(run("table2").out.find("\n4,4,5,6,0,1,2,3\n"), std::string::npos);
  const CliRun t3 = run("table3 --format md");
  EXPECT_EQ(t3.status, 0);
  EXPECT_NE(t3.out.find("(16)100(23)6(23)94(17)100(7)4(11)96"), std::string::npos);
}

TEST(Cli, Seq) {
  const CliRun r = run("seq --day 1 --weekday 2");
  EXPECT_EQ(r.status, 0);
  const auto v = year_values_csv(r.out);
  ASSERT_EQ(v.size(), 400u);
  EXPECT_EQ(v[0], 2);

  const auto s1 = year_values_csv(run("seq --day 1 --weekday 0").out);
  const std::vector<int> want = {1, 2, 2, 1, 2, 1, 2, 2, 1, 3, 1, 1, 3, 2, 1, 3, 1, 2, 2, 2, 2, 1, 1, 2, 2, 1, 3, 1};
  EXPECT_TRUE(std::equal(want.begin(), want.end(), s1.begin()));

  EXPECT_NE(run("seq --day 13 --weekday Friday").out.find("# total=688"), std::string::npos);
  EXPECT_EQ(run("seq --day 32 --weekday 0").status, 2);
  EXPECT_EQ(run("seq --day 1 --weekday 7").status, 2);
  EXPECT_EQ(run("seq --day 1 --weekday Funday").status, 2);
  EXPECT_EQ(run("seq --day 1 --weekday 0 --format xml").status, 2);
}

TEST(Cli, EncodeDecode) {
  CliRun r = run("encode --day 1 --weekday 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "(4)100(17)101(17)102(17)97\n");
  EXPECT_EQ(run("encode --day 31 --weekday 0").out, "(0)102(17)99(17)99(17)100\n");

  r = run("decode --period 1 \"(4)100(17)101(17)102(17)97\"");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(year_values_csv(r.out), year_values_csv(run("seq --day 1 --weekday 2").out));
}

TEST(Cli, DecodeErrors) {
  CliRun r = run("decode --period 1 \"(4)100\"", true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("sum to 100"), std::string::npos);

  r = run("decode --period 31 \"(0)102(17)99(17)99(17)(100)\"");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(year_values_csv(r.out), year_values_csv(run("seq --day 31 --weekday 0").out));

  r = run("decode --period 31 --strict \"(0)102(17)99(17)99(17)(100)\"", true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("offset 22"), std::string::npos);

  r = run("decode --period 1 \"(4)1x0\"", true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("offset 4"), std::string::npos);

  EXPECT_EQ(run("decode --period 2 \"(0)400\"").status, 2);
  EXPECT_EQ(run("decode \"(0)400\"").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, VerifySingleSuite) {
  const CliRun r = run("verify --suite oracle");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("PASS oracle"), std::string::npos);
  EXPECT_EQ(r.out.find("table3"), std::string::npos);
  EXPECT_EQ(run("verify --suite nope").status, 2);
}

TEST(Cli, VerifyPassingSuites) {
  for (const char* s : {"cycle", "table1", "table2", "periods", "reduction", "roundtrip", "periodicity"}) {
    EXPECT_EQ(run(std::string("verify --suite ") + s).status, 0) << s;
  }
}

// The published Table 3 has three cells that do not decode to brute force,
// so a full run reports them and exits 1.
TEST(Cli, VerifyFullRunReportsPublishedTableDefects) {
  const CliRun r = run("verify");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("FAIL table3"), std::string::npos);
  EXPECT_NE(r.out.find("(d=29, Fr)"), std::string::npos);
  EXPECT_NE(r.out.find("(d=29, Sa)"), std::string::npos);
  EXPECT_NE(r.out.find("(d=30, Sa)"), std::string::npos);
  EXPECT_NE(r.out.find("25/28 cells"), std::string::npos);
  EXPECT_NE(r.out.find("8/9 suites passed"), std::string::npos);
}

TEST(Cli, VerifyFixtureFaultInjection) {
  std::ifstream in(GREGCYCLE_FIXTURE_PATH);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();

  // Sanity: the three defective cells replaced by round-tripping strings.
  std::string fixed = text;
  const auto replace = [](std::string& s, const std::string& from, const std::string& to) {
    const auto at = s.find(from);
    ASSERT_NE(at, std::string::npos) << from;
    s.replace(at, from.size(), to);
  };
  replace(fixed, "29 5 (24)100(7)4(11)97(17)100(16)99", "29 5 (24)100(7)4(11)97(17)99(17)100");
  replace(fixed, "29 6 (12)103(17)99(17)103(18)95", "29 6 (12)103(17)99(17)98(17)100");
  replace(fixed, "30 6 (12)100(7)5(11)96(17)100(16)99", "30 6 (12)100(7)5(11)96(17)99(17)100");
  const auto good_path = temp_path("good.txt");
  std::ofstream(good_path) << fixed;
  CliRun r = run("verify --suite table3 --fixture \"" + good_path.string() + "\"");
  EXPECT_EQ(r.status, 0) << r.out;

  // One corrupted digit in (1, Tu).
  std::string corrupt = fixed;
  replace(corrupt, "1 2 (4)100(17)101(17)102(17)97", "1 2 (4)100(17)101(16)102(17)97");
  const auto bad_path = temp_path("bad.txt");
  std::ofstream(bad_path) << corrupt;
  r = run("verify --fixture \"" + bad_path.string() + "\"");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("(d=1, Tu) (4)100(17)101(16)102(17)97: first mismatch at index 201"), std::string::npos)
      << r.out;

  EXPECT_EQ(run("verify --fixture /nonexistent/table3.txt").status, 2);
  std::filesystem::remove(good_path);
  std::filesystem::remove(bad_path);
}

TEST(Cli, ClockAndOut) {
  const CliRun a = run("clock --period 30");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out.rfind("<?xml", 0), 0u);
  EXPECT_NE(a.out.find("data-index=\"0\" data-value=\"3\""), std::string::npos);
  EXPECT_EQ(a.out, run("clock --period 30").out);
  EXPECT_EQ(run("clock --period 5").status, 2);
  EXPECT_EQ(run("clock --period 1 --radius -1").status, 2);

  const auto path = temp_path("clock.svg");
  EXPECT_EQ(run("clock --period 1 --no-indices --out \"" + path.string() + "\"").status, 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_NE(ss.str().find("data-index=\"0\" data-value=\"1\""), std::string::npos);
  EXPECT_EQ(ss.str().find("class=\"index\""), std::string::npos);
  std::filesystem::remove(path);
}
