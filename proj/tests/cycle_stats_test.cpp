#include "gregcycle/cycle_stats.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>

using namespace gregcycle;

namespace {

const std::array<int, 28> kS1 = {1, 2, 2, 1, 2, 1, 2, 2, 1, 3, 1, 1, 3, 2,
                                 1, 3, 1, 2, 2, 2, 2, 1, 1, 2, 2, 1, 3, 1};

using Row = std::array<int, 7>;

}  // namespace

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity_sequence(1, weekdays::Tuesday).counts[0], 2);
  const auto m10 = multiplicity_sequence(1, weekdays::Sunday);
  EXPECT_TRUE(std::equal(kS1.begin(), kS1.end(), m10.counts.begin()));
  for (int w = 0; w < 7; ++w) {
    const auto m = multiplicity_sequence(31, Weekday::from_index(w));
    EXPECT_LE(*std::max_element(m.counts.begin(), m.counts.end()), 7);
  }
  EXPECT_EQ(multiplicity_sequence(13, weekdays::Friday).total(), 688);
}

TEST(Multiplicity, RejectsBadDay) {
  EXPECT_THROW(multiplicity_sequence(0, weekdays::Sunday), std::domain_error);
  EXPECT_THROW(multiplicity_sequence(32, weekdays::Sunday), std::domain_error);
}

TEST(Multiplicity, MonthsPerYearAcrossWeekdays) {
  for (int d : {1, 13, 28, 29, 30, 31}) {
    std::array<int, kCycleYears> sum{};
    for (int w = 0; w < 7; ++w) {
      const auto m = multiplicity_sequence(d, Weekday::from_index(w));
      for (int y = 0; y < kCycleYears; ++y) sum[y] += m.counts[y];
    }
    for (int y = 0; y < kCycleYears; ++y) {
      const int want = d <= 28 ? 12 : d == 29 ? 11 + (is_leap(y) ? 1 : 0) : d == 30 ? 11 : 7;
      ASSERT_EQ(sum[y], want) << "day " << d << " year " << y;
    }
  }
}

TEST(Reduction, ReduceDay) {
  EXPECT_EQ(reduce_day(17), 3);
  EXPECT_EQ(reduce_day(28), 7);
  EXPECT_EQ(reduce_day(6), 6);
  EXPECT_EQ(reduce_day(7), 7);
  EXPECT_EQ(reduce_day(8), 1);
  EXPECT_THROW(reduce_day(0), std::domain_error);
  EXPECT_THROW(reduce_day(29), std::domain_error);
}

TEST(Reduction, ToeplitzWeekday) {
  EXPECT_EQ(toeplitz_weekday(3, weekdays::Thursday).index(), 2);
  for (int w = 0; w < 7; ++w) EXPECT_EQ(toeplitz_weekday(1, Weekday::from_index(w)).index(), w);
  EXPECT_EQ(toeplitz_weekday(7, weekdays::Sunday).index(), 1);
  EXPECT_THROW(toeplitz_weekday(0, weekdays::Sunday), std::domain_error);
  EXPECT_THROW(toeplitz_weekday(8, weekdays::Sunday), std::domain_error);
}

// Exhaustive over d in 1..28, D in 0..6, all 400 years, using the
// brute-force generator on both sides.
TEST(Reduction, IdentityHoldsExhaustively) {
  std::map<int, MultiplicitySequence> first_day;
  for (int w = 0; w < 7; ++w) first_day.emplace(w, multiplicity_sequence(1, Weekday::from_index(w)));
  int comparisons = 0;
  for (int d = 1; d <= 28; ++d) {
    for (int w = 0; w < 7; ++w) {
      const auto m = multiplicity_sequence(d, Weekday::from_index(w));
      const int via = toeplitz_weekday(reduce_day(d), Weekday::from_index(w)).index();
      for (int y = 0; y < kCycleYears; ++y) {
        ASSERT_EQ(m.counts[y], first_day.at(via).counts[y]) << d << "," << w << "," << y;
        ++comparisons;
      }
    }
  }
  EXPECT_EQ(comparisons, 78400);
}

TEST(Occurrence, PublishedRows) {
  const OccurrenceTable t = occurrence_table();
  EXPECT_EQ(t.row_for(1), (Row{688, 684, 687, 685, 685, 687, 684}));
  EXPECT_EQ(t.row_for(6), (Row{687, 685, 685, 687, 684, 688, 684}));
  EXPECT_EQ(t.row_for(29), (Row{644, 641, 644, 642, 642, 643, 641}));
  EXPECT_EQ(t.row_for(30), (Row{627, 631, 626, 631, 627, 629, 629}));
  EXPECT_EQ(t.row_for(31), (Row{400, 399, 401, 398, 402, 399, 401}));
}

TEST(Occurrence, RowSums) {
  const OccurrenceTable t = occurrence_table();
  for (int r = 0; r < 7; ++r) EXPECT_EQ(t.row_sum(r), 4800);
  EXPECT_EQ(t.row_sum(OccurrenceTable::row_of(29)), 4497);
  EXPECT_EQ(t.row_sum(OccurrenceTable::row_of(30)), 4400);
  EXPECT_EQ(t.row_sum(OccurrenceTable::row_of(31)), 2800);
}

TEST(Occurrence, SymmetricToeplitzBlock) {
  const OccurrenceTable t = occurrence_table();
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      EXPECT_EQ(t.cells[i][j], t.cells[j][i]);
      EXPECT_EQ(t.cells[i][j], t.cells[0][(j - i + 7) % 7]);
      EXPECT_EQ(t.cells[i][j] == 688, i == j);
      EXPECT_LE(t.cells[i][j], 688);
    }
  }
}

TEST(Occurrence, MaximaPositions) {
  const OccurrenceTable t = occurrence_table();
  const auto argmax = [&](int day) {
    const auto& row = t.row_for(day);
    const int mx = *std::max_element(row.begin(), row.end());
    std::vector<int> at;
    for (int w = 0; w < 7; ++w) {
      if (row[w] == mx) at.push_back(w);
    }
    return std::pair{mx, at};
  };
  EXPECT_EQ(argmax(29), (std::pair{644, std::vector<int>{0, 2}}));
  EXPECT_EQ(argmax(30), (std::pair{631, std::vector<int>{1, 3}}));
  EXPECT_EQ(argmax(31), (std::pair{402, std::vector<int>{4}}));
}

TEST(Occurrence, RowLabels) {
  EXPECT_EQ(OccurrenceTable::row_label(0), "1 (8,15,22)");
  EXPECT_EQ(OccurrenceTable::row_label(1), "2 (9,16,23)");
  EXPECT_EQ(OccurrenceTable::row_label(6), "7 (14,21,28)");
  EXPECT_EQ(OccurrenceTable::row_label(7), "29");
  EXPECT_THROW(OccurrenceTable::row_of(8), std::domain_error);
}
