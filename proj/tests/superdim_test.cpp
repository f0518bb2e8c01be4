#include <gtest/gtest.h>

#include <stdexcept>

#include "superschur/superdim.hpp"

using namespace superschur;

TEST(SuperDim, RejectsNegativeComponents) {
  EXPECT_THROW(SuperDim(-1, 0), std::domain_error);
  EXPECT_THROW(SuperDim(0, -2), std::domain_error);
  EXPECT_THROW((SignedSuperDim{1, -1}.to_superdim()), std::domain_error);
}

TEST(SuperDim, PartialOrder) {
  EXPECT_TRUE(leq(SuperDim(1, 2), SuperDim(2, 2)));
  EXPECT_TRUE(leq(SuperDim(0, 0), SuperDim(0, 0)));
  EXPECT_FALSE(leq(SuperDim(2, 1), SuperDim(1, 2)));
  EXPECT_FALSE(leq(SuperDim(1, 2), SuperDim(2, 1)));
  EXPECT_TRUE(strictly_less(SignedSuperDim{0, 0}, SignedSuperDim{0, 1}));
  EXPECT_FALSE(strictly_less(SignedSuperDim{1, 1}, SignedSuperDim{1, 1}));
}

TEST(SuperDim, Total) {
  EXPECT_EQ(total(SuperDim(3, 1)), 4);
  EXPECT_EQ(total(SuperDim(0, 0)), 0);
  EXPECT_EQ((SignedSuperDim{1, 1}.total()), 2);
}

TEST(SuperDim, PiSwap) {
  EXPECT_EQ(pi_swap(SuperDim(2, 3)), SuperDim(3, 2));
  EXPECT_EQ(pi_swap(SuperDim(1, 1)), SuperDim(1, 1));
}

TEST(SuperDim, Bound) {
  EXPECT_EQ(bound(SuperDim(3, 0)), SuperDim(3, 0));
  EXPECT_EQ(bound(SuperDim(1, 1)), SuperDim(1, 1));
  EXPECT_EQ(bound(SuperDim(0, 0)), SuperDim(0, 0));
  EXPECT_EQ(bound(SuperDim(2, 3)), SuperDim(1 + 6, 6));
  EXPECT_EQ(bound(SuperDim(5, 0)), SuperDim(10, 0));
}

TEST(SuperDim, BoundMatchesExteriorCount) {
  // bound(m,n) counts super-alternating pairs: i<j among even, i<=j among odd, all mixed.
  for (std::int64_t m = 0; m <= 6; ++m) {
    for (std::int64_t n = 0; n <= 6; ++n) {
      std::int64_t even = 0, odd = 0;
      for (std::int64_t i = 0; i < m; ++i) even += m - i - 1;
      for (std::int64_t i = 0; i < n; ++i) even += n - i;
      odd = m * n;
      EXPECT_EQ(bound(SuperDim(m, n)), SuperDim(even, odd));
    }
  }
}

TEST(SuperDim, Tensor) {
  EXPECT_EQ(tensor(SuperDim(2, 0), SuperDim(2, 0)), SuperDim(4, 0));
  EXPECT_EQ(tensor(SuperDim(1, 0), SuperDim(0, 1)), SuperDim(0, 1));
  EXPECT_EQ(tensor(SuperDim(2, 1), SuperDim(1, 3)), SuperDim(2 + 3, 6 + 1));
}

TEST(SuperDim, Arithmetic) {
  EXPECT_EQ(SuperDim(1, 2) + SuperDim(3, 4), SuperDim(4, 6));
  EXPECT_EQ(SuperDim(1, 2) - SuperDim(3, 1), (SignedSuperDim{-2, 1}));
  EXPECT_EQ(to_string(SuperDim(4, 3)), "(4,3)");
  EXPECT_EQ(to_string(SignedSuperDim{-1, 0}), "(-1,0)");
}
