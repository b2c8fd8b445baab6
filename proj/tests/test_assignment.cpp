#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "wbembed/assignment.hpp"
#include "wbembed/error.hpp"

using namespace wbembed;

namespace {

double brute_force(const CostMatrix& c) {
  std::vector<std::size_t> perm(c.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = 1e300;
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) s += c(i, perm[i]);
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST(Assignment, SwapMatrix) {
  const auto a = assignment_solve(CostMatrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(a.cost, 0.0);
  EXPECT_EQ(a.row_to_col, (std::vector<std::size_t>{0, 1}));
}

TEST(Assignment, Singleton) {
  const auto a = assignment_solve(CostMatrix::from_rows({{5}}));
  EXPECT_EQ(a.cost, 5.0);
  EXPECT_EQ(a.row_to_col, (std::vector<std::size_t>{0}));
}

TEST(Assignment, Empty) { EXPECT_EQ(assignment_solve(CostMatrix(0)).cost, 0.0); }

TEST(Assignment, RejectsBadInput) {
  EXPECT_THROW(CostMatrix::from_rows({{1, 2}}), Error);
  EXPECT_THROW(assignment_solve(CostMatrix::from_rows({{-1}})), Error);
  EXPECT_THROW(assignment_solve(CostMatrix::from_rows({{std::nan("")}})), Error);
}

TEST(Assignment, MatchesEnumeration) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < (n <= 6 ? 50 : 10); ++trial) {
      CostMatrix c(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = trial % 3 == 0 ? std::floor(u(rng)) : u(rng);
      const auto a = assignment_solve(c);
      EXPECT_NEAR(a.cost, brute_force(c), 1e-9) << "n = " << n;
      std::vector<std::size_t> sorted = a.row_to_col;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(sorted[i], i);
    }
  }
}
