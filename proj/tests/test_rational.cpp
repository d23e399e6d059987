#include <gtest/gtest.h>

#include <stdexcept>

#include "tdiff/product_set.hpp"
#include "tdiff/rational.hpp"

using tdiff::ProductSet;
using tdiff::Rational;

TEST(Rational, NormalizesToLowestTerms) {
  Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_EQ(Rational(0, 5).den(), 1);
}

TEST(Rational, ArithmeticIsExact) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
}

TEST(Rational, OrderingCrossMultiplies) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(3, 4), Rational(2, 3));
  EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
}

TEST(Rational, OverflowThrowsInsteadOfWrapping) {
  const Rational big(INT64_MAX);
  EXPECT_THROW(big + Rational(1), std::overflow_error);
  EXPECT_THROW(Rational(1, INT64_MAX) * Rational(1, 3), std::overflow_error);
}

TEST(Rational, ZeroDenominatorAndDivisionRejected) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("2"), Rational(2));
  EXPECT_EQ(Rational::parse("-2/6"), Rational(-1, 3));
  EXPECT_EQ(Rational(1).str(), "1/1");
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  for (const char* bad : {"0.5", "1e3", "", "/2", "1/", "1/0", "1/-2", "a/b", "1/2/3"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(ProductSet, BasicOperations) {
  ProductSet s;
  EXPECT_TRUE(s.empty());
  s.insert(3);
  s.insert(0);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.front(), 0u);
  EXPECT_FALSE(s.is_singleton());
  EXPECT_TRUE(ProductSet::single(5).is_singleton());
  EXPECT_TRUE(ProductSet::single(3).subset_of(s));
  EXPECT_EQ(s.to_vector(), (std::vector<tdiff::ProductId>{0, 3}));
  s.erase(0);
  EXPECT_EQ(s, ProductSet::single(3));
  EXPECT_EQ(ProductSet::first(64).size(), 64u);
}
