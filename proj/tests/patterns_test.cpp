#include <gtest/gtest.h>

#include "gtq/pattern.hpp"
#include "gtq/suites.hpp"
#include "oracles.hpp"

using namespace gtq;

namespace {

std::vector<HalfInt> row(std::initializer_list<int> twice) {
  std::vector<HalfInt> r;
  for (int v : twice) r.push_back(HalfInt::from_twice(v));
  return r;
}

GTPattern pat(int n, std::vector<std::vector<int>> twice_rows) {
  std::vector<std::vector<HalfInt>> rows;
  for (const auto &r : twice_rows) {
    std::vector<HalfInt> h;
    for (int v : r) h.push_back(HalfInt::from_twice(v));
    rows.push_back(h);
  }
  return GTPattern(n, rows);
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(is_valid(pat(3, {{2}, {2}})));
  Validation v = validate(pat(3, {{2}, {4}}));
  EXPECT_FALSE(v.valid);
  EXPECT_FALSE(v.violations.empty());
  EXPECT_TRUE(is_valid(pat(4, {{2, 0}, {2}, {2}})));
  EXPECT_FALSE(is_valid(pat(3, {{2}, {1}})));  // mixed integrality
  EXPECT_THROW(validate(pat(3, {{2}, {2, 0}})), std::invalid_argument);
}

TEST(EnumerateBasis, SmallDimensions) {
  EXPECT_EQ(enumerate_basis(3, row({2})).size(), 3u);
  EXPECT_EQ(enumerate_basis(4, row({2, 0})).size(), 4u);
  EXPECT_EQ(enumerate_basis(5, row({2, 0})).size(), 5u);
  auto spin = enumerate_basis(3, row({1}));
  ASSERT_EQ(spin.size(), 2u);
  EXPECT_EQ(spin[0].m(2, 1), HalfInt::from_twice(-1));
  EXPECT_EQ(spin[1].m(2, 1), HalfInt::from_twice(1));
  EXPECT_EQ(enumerate_basis(2, row({6})).size(), 1u);
  EXPECT_THROW(enumerate_basis(3, row({-2})), std::invalid_argument);
}

TEST(EnumerateBasis, MatchesBruteForceCounts) {
  for (int n = 3; n <= 5; ++n)
    for (const auto &top : oracle::all_tops(n, 3)) {
      std::vector<HalfInt> h;
      for (int v : top) h.push_back(HalfInt::from_twice(v));
      EXPECT_EQ(static_cast<long>(enumerate_basis(n, h).size()), oracle::count_patterns(n, top)) << "n=" << n;
    }
}

TEST(EnumerateBasis, OutputIsValidSortedAndBounded) {
  for (const auto &top : top_rows_up_to(5, HalfInt(2))) {
    auto basis = enumerate_basis(5, top);
    EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end()));
    for (const auto &p : basis) {
      ASSERT_TRUE(is_valid(p));
      auto l = l_coords(p);
      for (const auto &lr : l)
        for (std::size_t j = 0; j + 1 < lr.size(); ++j) EXPECT_GT(lr[j], lr[j + 1]) << p.to_string();
    }
  }
}

TEST(EnumerateBasis, EveryEntryHasAWall) {
  for (const auto &top : top_rows_up_to(5, HalfInt(2)))
    for (const auto &p : enumerate_basis(5, top))
      for (int r = 2; r <= 4; ++r)
        for (int c = 1; c <= r / 2; ++c) {
          // walking in one direction leaves the set after finitely many steps
          GTPattern up = p, down = p;
          int steps = 0;
          while (is_valid(up) && steps < 20) up = shift(up, r, c, +1), ++steps;
          EXPECT_LT(steps, 20);
          steps = 0;
          while (is_valid(down) && steps < 20) down = shift(down, r, c, -1), ++steps;
          EXPECT_LT(steps, 20);
        }
}

TEST(TopRows, AgreeWithBruteForce) {
  for (int n = 2; n <= 6; ++n) {
    auto lib = top_rows_up_to(n, HalfInt(2));
    auto ref = oracle::all_tops(n, 4);
    EXPECT_EQ(lib.size(), ref.size()) << "n=" << n;
  }
}

TEST(LCoords, Examples) {
  auto l = l_coords(pat(3, {{2}, {0}}));
  EXPECT_EQ(l[0][0], HalfInt(2));
  EXPECT_EQ(l[1][0], HalfInt(0));
  EXPECT_EQ(GTPattern::l_offset(2, 1), HalfInt(0));
  EXPECT_EQ(HalfInt(3) + GTPattern::l_offset(5, 2), HalfInt(4));
}

TEST(Shift, Examples) {
  EXPECT_EQ(shift(pat(3, {{2}, {0}}), 2, 1, +1), pat(3, {{2}, {2}}));
  GTPattern out = shift(pat(3, {{2}, {2}}), 2, 1, +1);
  EXPECT_EQ(out, pat(3, {{2}, {4}}));
  EXPECT_FALSE(is_valid(out));
  EXPECT_THROW(shift(pat(3, {{2}, {0}}), 3, 1, +1), std::invalid_argument);
}

TEST(PatternJson, RoundTrip) {
  GTPattern p = pat(5, {{3, 1}, {3, -1}, {1}, {-1}});
  std::string text = to_json(p);
  EXPECT_EQ(text, R"([["3/2","1/2"],["3/2","-1/2"],["1/2"],["-1/2"]])");
  EXPECT_EQ(pattern_from_json(text), p);
  EXPECT_EQ(pattern_from_json(R"([[1,0],["1"],[0]])"), pat(4, {{2, 0}, {2}, {0}}));
  for (const auto &q : enumerate_basis(5, row({4, 2}))) EXPECT_EQ(pattern_from_json(to_json(q)), q);
}
