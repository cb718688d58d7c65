#include <gtest/gtest.h>

#include "mtk/rational.hpp"

using mtk::Rational;

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(mtk::factorial(0), 1);
  EXPECT_EQ(mtk::factorial(10), 3628800);
  EXPECT_EQ(mtk::binomial(10, 3), 120);
  EXPECT_EQ(mtk::binomial(5, 0), 1);
  EXPECT_EQ(mtk::binomial(3, 5), 0);
  // Pascal's rule as an oracle.
  for (long n = 1; n < 25; ++n) {
    for (long k = 1; k < n; ++k) {
      EXPECT_EQ(mtk::binomial(n, k), mtk::binomial(n - 1, k - 1) + mtk::binomial(n - 1, k));
    }
  }
}

TEST(Rational, BernoulliNumbers) {
  EXPECT_EQ(mtk::bernoulli(0), 1);
  EXPECT_EQ(mtk::bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(mtk::bernoulli(2), Rational(1, 6));
  EXPECT_EQ(mtk::bernoulli(3), 0);
  EXPECT_EQ(mtk::bernoulli(4), Rational(-1, 30));
  EXPECT_EQ(mtk::bernoulli(12), Rational(-691, 2730));
  // sum_{k<n} C(n, k) B_k = 0 for n >= 2
  for (unsigned n = 2; n < 30; ++n) {
    Rational s = 0;
    for (unsigned k = 0; k < n; ++k) s += Rational(mtk::binomial(n, k)) * mtk::bernoulli(k);
    EXPECT_EQ(s, 0) << n;
  }
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(mtk::parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(mtk::parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(mtk::parse_rational("5"), 5);
  EXPECT_EQ(mtk::to_string(Rational(-1, 2)), "-1/2");
  EXPECT_EQ(mtk::to_string(Rational(4) / 2), "2");
  EXPECT_THROW(mtk::parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(mtk::parse_rational("abc"), std::invalid_argument);
  EXPECT_EQ(mtk::sign_pow(3), -1);
  EXPECT_EQ(mtk::sign_pow(-2), 1);
  EXPECT_NEAR(static_cast<double>(mtk::to_long_double(Rational(1, 3))), 1.0 / 3, 1e-17);
}
