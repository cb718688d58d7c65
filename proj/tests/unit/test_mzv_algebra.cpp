#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mtk/mzv_algebra.hpp"
#include "mtk/mzv_numeric.hpp"
#include "oracles.hpp"

using mtk::CoeffExpr;
using mtk::Composition;
using mtk::MzvMonomial;
using mtk::PiRational;
using mtk::Rational;

TEST(PiRational, Arithmetic) {
  const PiRational a = PiRational::pi_power(2, Rational(1, 6));
  const PiRational b = a * a;
  EXPECT_EQ(b.coefficient(2), Rational(1, 36));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_FALSE(a.is_rational());
  EXPECT_TRUE(PiRational(3).is_rational());
  EXPECT_NEAR(static_cast<double>(a.value()), std::numbers::pi * std::numbers::pi / 6, 1e-15);
  EXPECT_EQ(PiRational::pi_power(2, Rational(-1, 2)).str(), "-1/2·π^2");
  EXPECT_EQ(PiRational().str(), "0");
  EXPECT_THROW(PiRational::pi_power(3), std::invalid_argument);
}

TEST(MzvMonomial, SortedFactorsAndWeight) {
  const MzvMonomial m({Composition{3}, Composition{2}});
  EXPECT_EQ(m.str(), "Ze[2]·Ze[3]");
  EXPECT_EQ(m.weight(), 5);
  EXPECT_EQ(m, MzvMonomial({Composition{2}, Composition{3}}));
  EXPECT_TRUE(MzvMonomial().is_one());
  EXPECT_THROW(MzvMonomial({Composition{1, 2}}), std::invalid_argument);
}

TEST(CoeffExpr, ProductsAndPrinting) {
  CoeffExpr e = CoeffExpr::symbol(Composition{2}) * CoeffExpr::symbol(Composition{3});
  e *= Rational(2);
  EXPECT_EQ(e.str(), "2·Ze[2]·Ze[3]");
  EXPECT_EQ(e.max_degree(), 2u);
  EXPECT_EQ(e.weights(), std::vector<int>{5});
  EXPECT_TRUE((e - e).is_zero());
  EXPECT_EQ(CoeffExpr(Rational(0)).str(), "0");
}

TEST(Ze, ExtensionWithZeOneZero) {
  EXPECT_TRUE(mtk::ze(Composition{1}).is_zero());
  EXPECT_EQ(mtk::ze(Composition{}), CoeffExpr(1));
  // Ze^{1,1} = -Ze^2 / 2 and Ze^{1,1,1} = Ze^3 / 3
  EXPECT_EQ(mtk::ze(Composition{1, 1}), Rational(-1, 2) * CoeffExpr::symbol(Composition{2}));
  EXPECT_EQ(mtk::ze(Composition{1, 1, 1}), Rational(1, 3) * CoeffExpr::symbol(Composition{3}));
  // From Ze^1 Ze^2 = Ze^{1,2} + Ze^{2,1} + Ze^3 = 0.
  EXPECT_EQ(mtk::ze(Composition{1, 2}), -CoeffExpr::symbol(Composition{3}) - CoeffExpr::symbol(Composition{2, 1}));
}

TEST(Ze, ExtensionIsSymmetrel) {
  // Ze^a Ze^b = sum over the stuffle, for every a, b up to weight 6.
  std::vector<Composition> words;
  for (int p = 1; p <= 4; ++p) {
    for (auto& s : mtk::compositions_of_weight(p)) words.push_back(s);
  }
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (a.weight() + b.weight() > 6) continue;
      const CoeffExpr lhs = mtk::linearize(mtk::ze(a) * mtk::ze(b));
      CoeffExpr rhs;
      const mtk::WordPoly st = mtk::stuffle(a, b);
      for (const auto& [w, m] : st.terms()) rhs += Rational(m) * mtk::ze(w);
      EXPECT_EQ(lhs, mtk::linearize(rhs)) << a << " " << b;
    }
  }
}

TEST(Ze, MinusIsReversedWithSign) {
  EXPECT_EQ(mtk::ze_minus(Composition{3, 2}), -CoeffExpr::symbol(Composition{2, 3}));
  EXPECT_EQ(mtk::ze_minus(Composition{2, 2}), CoeffExpr::symbol(Composition{2, 2}));
}

TEST(Ze, Linearize) {
  const CoeffExpr e = mtk::linearize(CoeffExpr::symbol(Composition{2}) * CoeffExpr::symbol(Composition{2}));
  EXPECT_EQ(e, Rational(2) * CoeffExpr::symbol(Composition{2, 2}) + CoeffExpr::symbol(Composition{4}));
  EXPECT_EQ(mtk::mzv_product(Composition{2}, Composition{3}),
            CoeffExpr::symbol(Composition{2, 3}) + CoeffExpr::symbol(Composition{3, 2}) +
                CoeffExpr::symbol(Composition{5}));
}

TEST(Ze, PiPowerInZeta) {
  EXPECT_EQ(mtk::pi_power_in_zeta(1), 6);
  EXPECT_EQ(mtk::pi_power_in_zeta(2), 90);
  EXPECT_EQ(mtk::pi_power_in_zeta(3), 945);
  EXPECT_EQ(mtk::pi_power_in_zeta(4), 9450);
  for (int m = 1; m <= 5; ++m) {
    const double lhs = std::pow(std::numbers::pi, 2 * m);
    const double rhs = mtk::pi_power_in_zeta(m).get_d() * oracle::mzv_hoelder({2 * m});
    EXPECT_NEAR(lhs / rhs, 1.0, 1e-14) << m;
  }
}

TEST(Ze, NewtonRelation) {
  for (int omega = 2; omega <= 4; ++omega) {
    for (int p = 0; p <= 3; ++p) EXPECT_TRUE(mtk::newton_relation_check(omega, p)) << omega << " " << p;
  }
}
