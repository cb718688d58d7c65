#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mtk/errors.hpp"
#include "mtk/families.hpp"
#include "mtk/mzv_numeric.hpp"
#include "mtk/numerics.hpp"
#include "mtk/reduction.hpp"
#include "oracles.hpp"

using mtk::Complex;
using mtk::Composition;
using mtk::Rational;

namespace {

const double pi = std::numbers::pi;

double te2_factor(int k) {
  // [t^k] sinh^2(pi sqrt t) / pi^2 = 2^(2k-1) pi^(2k-2) / (2k)!
  return std::pow(2.0, 2 * k - 1) * std::pow(pi, 2 * k - 2) / std::tgamma(2 * k + 1);
}

}  // namespace

TEST(EpsilonWord, Invariants) {
  const auto w = mtk::EpsilonWord::from_mask(4, 0b0101);
  EXPECT_EQ(w.entries(), (std::vector<int>{-1, 1, -1, 1}));
  EXPECT_EQ(w.sg(), 1);
  EXPECT_EQ(w.s(), 0);
  EXPECT_LE(std::abs(mtk::EpsilonWord({1, 1, 1}).e()), 1e-15L);
  EXPECT_LE(std::abs(mtk::EpsilonWord({1}).e() + 1.0L), 1e-15L);
  EXPECT_THROW(mtk::EpsilonWord({1, 0}), std::invalid_argument);
  EXPECT_THROW(mtk::EpsilonWord(std::vector<int>{}), std::invalid_argument);
}

TEST(Ones, ClosedFormMatchesReduction) {
  for (int r = 1; r <= 8; ++r) {
    const auto f = mtk::te_ones_closed_form(r);
    const auto red = mtk::reduce(mtk::repeated(1, static_cast<std::size_t>(r)));
    EXPECT_NEAR(static_cast<double>(f.constant.value()), static_cast<double>(red.constant.value()), 1e-12) << r;
    EXPECT_NEAR(static_cast<double>(f.te1_coeff.value()), mtk::mzv_numeric(red.coefficient(1)).value, 1e-12) << r;
    for (const auto& [k, e] : red.coeffs) {
      if (k > 1) EXPECT_NEAR(mtk::mzv_numeric(e).value, 0.0, 1e-12) << r << " k=" << k;
    }
  }
  EXPECT_EQ(mtk::te_ones_closed_form(2).constant, mtk::PiRational::pi_power(2, Rational(-1, 2)));
  EXPECT_EQ(mtk::te_ones_closed_form(3).te1_coeff, mtk::PiRational::pi_power(2, Rational(-1, 6)));
}

TEST(TeNK, TwosAreMultiplesOfTeTwo) {
  for (int k = 1; k <= 4; ++k) {
    const auto r = mtk::reduce_clean(mtk::repeated(2, static_cast<std::size_t>(k)));
    EXPECT_NEAR(mtk::mzv_numeric(r.coefficient(2)).value, te2_factor(k), 1e-12) << k;
    for (const auto& [j, e] : r.coeffs) {
      if (j != 2) EXPECT_NEAR(mtk::mzv_numeric(e).value, 0.0, 1e-12);
    }
  }
  EXPECT_EQ(mtk::reduce(Composition{2, 2}).coefficient(2).str(), "2·Ze[2]");
}

TEST(TeNK, ClosedFormMatchesDirectSums) {
  const std::vector<Complex> zs{{0.2, 0.5}, {-0.3, 0.9}, {0.4, -0.7}};
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const Composition s = mtk::repeated(n, static_cast<std::size_t>(k));
      for (const Complex z : zs) {
        const Complex ref = k == 1 ? mtk::monotangent_eval(n, z).value : mtk::multitangent_eval_direct(s, z).value;
        const auto v = mtk::te_nk_closed_form(n, k, z);
        EXPECT_LE(std::abs(v.value - ref), 1e-9 * std::max(1.0, std::abs(ref))) << s << " " << z;
      }
    }
  }
}

TEST(TeNK, OnesAgainstReduction) {
  const Complex z(0.27, 0.6);
  for (int k = 1; k <= 6; ++k) {
    const auto red = mtk::reduce(mtk::repeated(1, static_cast<std::size_t>(k)));
    const Complex ref = mtk::evaluate_reduction(red, z).value;
    EXPECT_LE(std::abs(mtk::te_nk_closed_form(1, k, z).value - ref), 1e-10 * std::max(1.0, std::abs(ref))) << k;
  }
  EXPECT_LE(std::abs(mtk::te_nk_closed_form(3, 0, z).value - 1.0), 1e-14);
}

TEST(TeNK, TwosAndThreesFamily) {
  // 3 Te^{2^[3k]} + (-1)^(k+1) 2 Te^{3^[2k]} = 0
  const std::vector<Complex> zs{{0.2, 0.5}, {0.45, 0.9}};
  for (int k = 1; k <= 3; ++k) {
    for (const Complex z : zs) {
      const Complex a = mtk::te_nk_closed_form(2, 3 * k, z).value;
      const Complex b = mtk::te_nk_closed_form(3, 2 * k, z).value;
      EXPECT_LE(std::abs(3.0 * a + mtk::sign_pow(k + 1) * 2.0 * b), 1e-9 * std::abs(a)) << k;
    }
  }
  const Complex z(0.2, 0.5);
  EXPECT_LE(std::abs(3.0 * mtk::multitangent_eval_direct(mtk::repeated(2, 6), z).value -
                     2.0 * mtk::multitangent_eval_direct(mtk::repeated(3, 4), z).value),
            1e-9);
}

TEST(TeNK, Arguments) {
  EXPECT_THROW(mtk::te_nk_closed_form(0, 1, {0.2, 0.3}), std::invalid_argument);
  EXPECT_THROW(mtk::te_nk_closed_form(2, 1, {1.0, 0.0}), mtk::PoleProximityError);
}

TEST(Zagier, TwosAgainstNestedSums) {
  for (int n = 1; n <= 4; ++n) {
    const double v = static_cast<double>(mtk::zagier_ze2n(n).value());
    EXPECT_NEAR(v, std::pow(pi, 2 * n) / std::tgamma(2 * n + 2), 1e-15);
    EXPECT_NEAR(v, oracle::mzv_hoelder(std::vector<int>(static_cast<std::size_t>(n), 2)), 1e-14);
  }
}

TEST(SinProduct, GeneratingSeries) {
  for (int order = 1; order <= 8; ++order) {
    double dev = -1;
    EXPECT_TRUE(mtk::sin_product_series_check(order, {}, &dev)) << order;
    // the recursion cancels against targets of size pi^2m/(2m+1)!
    if (order > 3) EXPECT_LE(dev, 1e-9);
  }
}
