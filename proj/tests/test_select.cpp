#include <gtest/gtest.h>

#include <random>

#include "dilation/select.hpp"
#include "support/oracles.hpp"

using namespace dil;

TEST(SelectXY, SmallExamples) {
  const std::vector<double> x{1, 2}, y{10, 20};
  EXPECT_EQ(select_xy(x, y, 1), 11.0);
  EXPECT_EQ(select_xy(x, y, 2), 12.0);
  EXPECT_EQ(select_xy(x, y, 3), 21.0);
  EXPECT_EQ(select_xy(x, y, 4), 22.0);

  const std::vector<double> zeros{0, 0, 0};
  EXPECT_EQ(select_xy(zeros, zeros, 5), 0.0);
}

TEST(SelectXY, RankOutOfRange) {
  const std::vector<double> x{1, 2}, y{3};
  EXPECT_THROW(select_xy(x, y, 0), std::out_of_range);
  EXPECT_THROW(select_xy(x, y, 3), std::out_of_range);
  const std::vector<double> unsorted{2, 1};
  EXPECT_THROW(select_xy(unsorted, y, 1), std::invalid_argument);
}

TEST(SelectXY, EveryRankOfSmallListsMatchesFullSort) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> value(-5, 5);  // plenty of duplicates
  for (std::size_t nx = 1; nx <= 9; ++nx) {
    for (std::size_t ny = 1; ny <= 9; ++ny) {
      std::vector<double> x(nx), y(ny);
      for (auto& v : x) v = value(rng);
      for (auto& v : y) v = value(rng) * 0.5;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      double prev = -1e300;
      for (std::uint64_t i = 1; i <= nx * ny; ++i) {
        const double got = select_xy(x, y, i);
        ASSERT_EQ(got, ref::naive_select_xy(x, y, i)) << nx << "x" << ny << " rank " << i;
        ASSERT_GE(got, prev);
        prev = got;
      }
    }
  }
}

TEST(SelectXY, LargeRandomListsMatchFullSort) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> value(0.0, 3.0);
  std::vector<double> x(1000), y(1000);
  for (auto& v : x) v = value(rng);
  for (auto& v : y) v = value(rng);
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());

  std::vector<double> sums;
  sums.reserve(x.size() * y.size());
  for (double a : x)
    for (double b : y) sums.push_back(a + b);
  std::sort(sums.begin(), sums.end());

  std::uniform_int_distribution<std::uint64_t> rank(1, sums.size());
  std::vector<std::uint64_t> ranks{1, sums.size(), sums.size() / 2};
  for (int i = 0; i < 50; ++i) ranks.push_back(rank(rng));
  for (auto r : ranks) ASSERT_EQ(select_xy(x, y, r), sums[r - 1]) << "rank " << r;
}

TEST(SelectXY, WorkIsLinear) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  auto work_for = [&](std::size_t m) {
    std::vector<double> x(m), y(m);
    for (auto& v : x) v = value(rng);
    for (auto& v : y) v = -value(rng);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    SelectStats stats;
    const std::uint64_t total = static_cast<std::uint64_t>(m) * m;
    for (std::uint64_t r : {total / 7, total / 2, total - total / 5}) select_xy(x, y, r, &stats);
    return static_cast<double>(stats.work) / static_cast<double>(m);
  };
  const double small = work_for(1000);
  const double large = work_for(64000);
  EXPECT_LT(large / small, 2.0);
  EXPECT_GT(large / small, 0.5);
}
