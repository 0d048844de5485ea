#include <gtest/gtest.h>

#include <vector>

#include "gstirling/genstirling.hpp"
#include "gstirling/rook.hpp"
#include "gstirling/tnn.hpp"
#include "oracles.hpp"

namespace gstirling {
namespace {

TEST(FerrersBoard, Validation) {
  EXPECT_THROW(FerrersBoard({2, 1}), PreconditionError);
  EXPECT_THROW(FerrersBoard({-1, 0}), PreconditionError);
  const FerrersBoard b({0, 2, 2});
  EXPECT_EQ(b.columns(), 3u);
  EXPECT_EQ(b.height(2), 2);
}

TEST(RookNumbers, Examples) {
  const FerrersBoard flat({1, 1});
  EXPECT_EQ(rook_numbers_bruteforce(flat, 2, 0), 1u);
  EXPECT_EQ(rook_numbers_bruteforce(flat, 2, 1), 2u);
  EXPECT_EQ(rook_numbers_bruteforce(flat, 2, 2), 0u);
  EXPECT_EQ(rook_numbers_bruteforce(FerrersBoard({1, 2}), 2, 2), 1u);
  EXPECT_EQ(rook_numbers_bruteforce(FerrersBoard({0, 0, 0}), 3, 0), 1u);
  EXPECT_EQ(rook_numbers_bruteforce(FerrersBoard({0, 0, 0}), 3, 1), 0u);
  EXPECT_THROW(rook_numbers_bruteforce(FerrersBoard({1}), 2, 0), PreconditionError);
  EXPECT_THROW(rook_numbers_bruteforce(FerrersBoard(std::vector<long>(11, 1)), 1, 0), ResourceError);
}

TEST(RookNumbers, MatchPlacementOracle) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& b : oracle::all_nondecreasing(n, 0, 4)) {
      const FerrersBoard board(b);
      for (std::size_t m = 0; m <= n; ++m)
        for (std::size_t k = 0; k <= m; ++k) ASSERT_EQ(rook_numbers_bruteforce(board, m, k), oracle::rook_placements(board, m, k));
    }
  }
}

TEST(Gjw, Examples) {
  EXPECT_TRUE(gjw_check(FerrersBoard({0, 0, 0, 0}), 4));
  EXPECT_TRUE(gjw_check(FerrersBoard({1, 2, 3, 4, 5}), 5));
  EXPECT_TRUE(gjw_check(FerrersBoard({1, 2, 3}), 3));
  EXPECT_TRUE(gjw_check(FerrersBoard({2, 2, 4, 7}), 2));
}

TEST(RookMatrix, SequencesAreRestrictedGrowth) {
  const SequencePair sp = rook_sequence_pair(FerrersBoard({1, 2, 3}));
  EXPECT_EQ(sp, SequencePair(to_rationals({0, 1, 2}), to_rationals({-1, -1, -1})));
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& b : oracle::all_nondecreasing(n, 0, 4)) ASSERT_TRUE(rgs_check(rook_sequence_pair(FerrersBoard(b))).is_rgs);
}

TEST(RookMatrix, Examples) {
  EXPECT_EQ(rook_matrix(FerrersBoard({0, 0, 0})), TriMatrix::identity(3));
  const FerrersBoard staircase({1, 2, 3, 4});
  const TriMatrix r = rook_matrix(staircase);
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t k = 0; k <= m; ++k) EXPECT_EQ(r(m, k), Rational(rook_numbers_bruteforce(staircase, m, m - k)));
  EXPECT_EQ(r(4, 2), Rational(25));
}

TEST(RookMatrix, PositiveHeightsAreTnn) {
  for (const auto& b : oracle::all_nondecreasing(4, 1, 3)) EXPECT_FALSE(find_negative_minor(rook_matrix(FerrersBoard(b))));
}

}  // namespace
}  // namespace gstirling
