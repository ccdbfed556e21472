#include <gtest/gtest.h>

#include "braidinv/errors.hpp"
#include "braidinv/permutation.hpp"

using namespace braidinv;

TEST(Permutation, Construction) {
  EXPECT_TRUE(Permutation(5).is_identity());
  EXPECT_THROW(Permutation(std::vector<std::uint8_t>{0, 0, 1}), DomainError);
  EXPECT_THROW(Permutation::from_one_line({1, 3}), DomainError);
  const auto p = Permutation::from_cycles(4, {{1, 4}, {2, 3}});
  EXPECT_EQ(p.images(), (std::vector<std::uint8_t>{3, 2, 1, 0}));
  EXPECT_EQ(p, Permutation::from_one_line({4, 3, 2, 1}));
}

TEST(Permutation, CompositionAppliesRightFirst) {
  const auto a = Permutation::from_cycles(3, {{1, 2}});
  const auto b = Permutation::from_cycles(3, {{2, 3}});
  const auto ab = a * b;
  EXPECT_EQ(ab(1), a(b(1)));
  EXPECT_EQ(ab, Permutation::from_cycles(3, {{1, 2, 3}}));
}

TEST(Permutation, RankRoundTripAndGroupLaws) {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto total = factorial32(n);
    for (std::uint32_t r = 0; r < total; ++r) {
      const auto p = Permutation::unrank(n, r);
      EXPECT_EQ(p.rank(), r);
      EXPECT_TRUE((p * p.inverse()).is_identity());
      if (r > 0) EXPECT_LT(Permutation::unrank(n, r - 1), p);
    }
  }
  for (std::uint32_t a = 0; a < 120; a += 7)
    for (std::uint32_t b = 0; b < 120; b += 5) {
      const auto p = Permutation::unrank(5, a), q = Permutation::unrank(5, b);
      EXPECT_EQ((p * q).sign(), p.sign() * q.sign());
    }
}

TEST(Permutation, Sign) {
  EXPECT_EQ(Permutation::from_cycles(4, {{1, 2}}).sign(), -1);
  EXPECT_EQ(Permutation::from_cycles(4, {{1, 2, 3}}).sign(), 1);
  EXPECT_EQ(Permutation::from_cycles(4, {{1, 2, 3, 4}}).sign(), -1);
}
