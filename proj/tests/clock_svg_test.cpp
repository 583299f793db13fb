#include "gregcycle/clock_svg.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <regex>
#include <vector>

using namespace gregcycle;

namespace {

// Minimal well-formedness check: balanced, properly nested elements.
bool balanced_tags(const std::string& svg) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = svg.find('<', pos)) != std::string::npos) {
    const std::size_t end = svg.find('>', pos);
    if (end == std::string::npos) return false;
    const std::string tag = svg.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty() || tag[0] == '?' || tag[0] == '!') continue;
    if (tag.back() == '/') continue;
    const std::string name = tag.substr(tag[0] == '/' ? 1 : 0, tag.find_first_of(" \n") - (tag[0] == '/' ? 1 : 0));
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else {
      stack.push_back(name);
    }
  }
  return stack.empty();
}

struct Position {
  int index;
  int value;
  double x;
  double y;
};

std::vector<Position> positions(const std::string& svg) {
  static const std::regex re(
      R"re(data-index="(\d+)" data-value="(\d+)">\s*<circle cx="([-0-9.]+)" cy="([-0-9.]+)")re");
  std::vector<Position> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stod((*it)[3]), std::stod((*it)[4])});
  }
  return out;
}

}  // namespace

TEST(Clock, ValuesFollowPeriodSequence) {
  for (PeriodId id : kAllPeriods) {
    const auto pos = positions(render_clock_svg({id, 200.0, true}));
    ASSERT_EQ(pos.size(), 28u);
    const auto s = extract_period(id);
    for (int i = 0; i < kPeriod; ++i) {
      EXPECT_EQ(pos[i].index, i);
      EXPECT_EQ(pos[i].value, s.entries[i]);
    }
  }
  EXPECT_EQ(positions(render_clock_svg({PeriodId::S1, 200.0, true}))[0].value, 1);
  EXPECT_EQ(positions(render_clock_svg({PeriodId::S30, 200.0, true}))[0].value, 3);
}

TEST(Clock, LayoutClockwiseFromTwelve) {
  const double r = 150.0;
  const auto pos = positions(render_clock_svg({PeriodId::S29, r, false}));
  const double c = r + 60.0;
  EXPECT_NEAR(pos[0].x, c, 0.01);
  EXPECT_NEAR(pos[0].y, c - r, 0.01);
  EXPECT_NEAR(pos[7].x, c + r, 0.01);  // quarter turn: three o'clock
  EXPECT_NEAR(pos[7].y, c, 0.01);
  EXPECT_NEAR(pos[14].y, c + r, 0.01);
  for (const auto& p : pos) EXPECT_NEAR(std::hypot(p.x - c, p.y - c), r, 0.01);
}

TEST(Clock, DeterministicAndSelfContained) {
  const ClockFigureSpec spec{PeriodId::S31, 180.0, true};
  const std::string a = render_clock_svg(spec);
  EXPECT_EQ(a, render_clock_svg(spec));
  EXPECT_TRUE(balanced_tags(a));
  EXPECT_EQ(a.find("href"), std::string::npos);
  EXPECT_EQ(a.find("url("), std::string::npos);
  EXPECT_EQ(a.find("@import"), std::string::npos);
}

TEST(Clock, IndexAnnotationToggle) {
  EXPECT_NE(render_clock_svg({PeriodId::S1, 200.0, true}).find("class=\"index\""), std::string::npos);
  EXPECT_EQ(render_clock_svg({PeriodId::S1, 200.0, false}).find("class=\"index\""), std::string::npos);
}

TEST(Clock, RejectsBadRadius) {
  EXPECT_THROW(render_clock_svg({PeriodId::S1, 0.0, true}), std::domain_error);
  EXPECT_THROW(render_clock_svg({PeriodId::S1, -5.0, true}), std::domain_error);
  EXPECT_THROW(render_clock_svg({PeriodId::S1, NAN, true}), std::domain_error);
}
