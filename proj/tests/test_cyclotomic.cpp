#include <gtest/gtest.h>

#include "braidinv/cyclotomic.hpp"
#include "braidinv/errors.hpp"

using namespace braidinv;

TEST(Cyclotomic, SmallPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (IntPoly{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (IntPoly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (IntPoly{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (IntPoly{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
  for (unsigned n = 1; n <= 60; ++n) {
    IntPoly xn(n + 1, 0);
    xn[0] = -1;
    xn[n] = 1;
    IntPoly rest = xn;
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d) continue;
      auto div = divide_monic(rest, cyclotomic_polynomial(d));
      for (const auto& c : div.remainder) EXPECT_EQ(c, 0) << n << " " << d;
      rest = div.quotient;
    }
    EXPECT_EQ(rest, IntPoly{1}) << n;
  }
}

TEST(Cyclotomic, RootSums) {
  for (unsigned L = 1; L <= 30; ++L) {
    CyclotomicSum all(L);
    for (unsigned k = 0; k < L; ++k) all.add_power(k);
    const auto v = all.as_integer();
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(*v, L == 1 ? 1 : 0) << L;
  }
  CyclotomicSum half = CyclotomicSum::root_power(6, 3);
  EXPECT_EQ(half.as_integer(), std::optional<BigInt>(-1));
  EXPECT_FALSE(CyclotomicSum::root_power(3, 1).as_integer().has_value());
  EXPECT_EQ(CyclotomicSum::root_power(4, 1) * CyclotomicSum::root_power(4, 3), CyclotomicSum::root_power(4, 0));
  EXPECT_EQ(CyclotomicSum::root_power(5, -1), CyclotomicSum::root_power(5, 4));
}
