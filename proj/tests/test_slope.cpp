#include <gtest/gtest.h>

#include <random>

#include "heckoid/slope.hpp"

namespace heckoid {
namespace {

TEST(Slope, NormalizesToLowestTermsWithPositiveDenominator) {
  EXPECT_EQ(Slope(2, 4), Slope(1, 2));
  EXPECT_EQ(Slope(-3, -6), Slope(1, 2));
  EXPECT_EQ(Slope(3, -6), Slope(-1, 2));
  EXPECT_EQ(Slope(0, 7), Slope(0));
  EXPECT_EQ(Slope(0).denominator(), 1);
}

TEST(Slope, InfinityIsProjective) {
  EXPECT_EQ(Slope(-1, 0), Slope::infinity());
  EXPECT_EQ(Slope(5, 0), Slope::infinity());
  EXPECT_TRUE(Slope::infinity().is_infinity());
  EXPECT_THROW(Slope(0, 0), std::invalid_argument);
}

TEST(Slope, OrdersAsRationalsWithInfinityOnTop) {
  EXPECT_LT(Slope(1, 3), Slope(2, 5));
  EXPECT_LT(Slope(-1, 2), Slope(0));
  EXPECT_LT(Slope(7, 2), Slope::infinity());
  EXPECT_FALSE(Slope::infinity() < Slope::infinity());
}

TEST(Slope, TextFormatRoundTrips) {
  EXPECT_EQ(Slope::parse("2/5"), Slope(2, 5));
  EXPECT_EQ(Slope::parse("-7/3"), Slope(-7, 3));
  EXPECT_EQ(Slope::parse("4"), Slope(4));
  EXPECT_EQ(Slope::parse("∞"), Slope::infinity());
  EXPECT_EQ(Slope::parse("inf"), Slope::infinity());
  EXPECT_EQ(Slope(2, 5).str(), "2/5");
  EXPECT_EQ(Slope(4).str(), "4");
  EXPECT_EQ(Slope::infinity().str(), "∞");
  EXPECT_THROW(Slope::parse(""), std::invalid_argument);
  EXPECT_THROW(Slope::parse("1 / 2"), std::invalid_argument);
  EXPECT_THROW(Slope::parse("abc"), std::invalid_argument);
}

TEST(ContinuedFraction, HandComputedExpansions) {
  EXPECT_EQ(continued_fraction(Slope(1, 3)).entries, std::vector<BigInt>({3}));
  EXPECT_EQ(continued_fraction(Slope(2, 5)).entries, std::vector<BigInt>({2, 2}));
  EXPECT_EQ(continued_fraction(Slope(3, 8)).entries, std::vector<BigInt>({2, 1, 2}));
  EXPECT_EQ(continued_fraction(Slope(1, 1)).entries, std::vector<BigInt>({1}));
}

TEST(ContinuedFraction, EvaluatesBack) {
  EXPECT_EQ(evaluate(ContinuedFraction{{3}}), Slope(1, 3));
  EXPECT_EQ(evaluate(ContinuedFraction{{2, 2}}), Slope(2, 5));
  EXPECT_EQ(evaluate(ContinuedFraction{{1}}), Slope(1, 1));
  EXPECT_THROW(evaluate(ContinuedFraction{{}}), std::invalid_argument);
  EXPECT_THROW(evaluate(ContinuedFraction{{2, 0}}), std::invalid_argument);
}

TEST(ContinuedFraction, RejectsSlopesOutsideUnitInterval) {
  EXPECT_THROW(continued_fraction(Slope(0)), std::invalid_argument);
  EXPECT_THROW(continued_fraction(Slope(-1, 3)), std::invalid_argument);
  EXPECT_THROW(continued_fraction(Slope(6, 5)), std::invalid_argument);
  EXPECT_THROW(continued_fraction(Slope::infinity()), std::invalid_argument);
}

// Round trip plus the normalization invariant: no final entry 1 once the
// expansion has at least two terms.
TEST(ContinuedFraction, RoundTripAndNormalization) {
  for (long long p = 1; p <= 1000; ++p) {
    for (long long q = 1; q <= p; ++q) {
      if (gcd(BigInt(q), BigInt(p)) != 1) continue;
      const Slope s(q, p);
      const ContinuedFraction cf = continued_fraction(s);
      ASSERT_FALSE(cf.entries.empty());
      if (cf.entries.size() >= 2) {
        ASSERT_GE(cf.entries.back(), 2) << s.str();
      }
      for (const BigInt& m : cf.entries) ASSERT_GE(m, 1);
      ASSERT_EQ(evaluate(cf), s);
    }
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const long long p = 1 + static_cast<long long>(rng() % 10000);
    const long long q = 1 + static_cast<long long>(rng() % p);
    const Slope s(q, p);
    const ContinuedFraction cf = continued_fraction(s);
    ASSERT_EQ(evaluate(cf), s);
    if (cf.entries.size() >= 2) {
      ASSERT_GE(cf.entries.back(), 2);
    }
  }
}

TEST(FundamentalInterval, EndpointsAndOutsiders) {
  EXPECT_TRUE(in_fundamental_interval(Slope(1, 4), 4));
  EXPECT_TRUE(in_fundamental_interval(Slope(2, 5), 4));
  EXPECT_FALSE(in_fundamental_interval(Slope(1, 5), 4));
  EXPECT_TRUE(in_fundamental_interval(Slope(1), 2));
  EXPECT_FALSE(in_fundamental_interval(Slope(0), 3));
  EXPECT_FALSE(in_fundamental_interval(Slope::infinity(), 3));
  EXPECT_THROW(in_fundamental_interval(Slope(1, 2), 1), std::invalid_argument);
}

}  // namespace
}  // namespace heckoid
