#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mtk/errors.hpp"
#include "mtk/mzv_numeric.hpp"
#include "mtk/words.hpp"
#include "oracles.hpp"

using mtk::Composition;

namespace {

std::vector<int> vec(const Composition& c) { return {c.parts().begin(), c.parts().end()}; }

}  // namespace

TEST(MzvNumeric, ClosedForms) {
  const double pi = std::numbers::pi;
  EXPECT_NEAR(mtk::ze_numeric(Composition{2}).value, pi * pi / 6, 1e-15);
  EXPECT_NEAR(mtk::ze_numeric(Composition{4}).value, std::pow(pi, 4) / 90, 1e-15);
  EXPECT_NEAR(mtk::ze_numeric(Composition{3, 1}).value, std::pow(pi, 4) / 360, 1e-15);
  EXPECT_NEAR(mtk::ze_numeric(Composition{2, 2}).value, std::pow(pi, 4) / 120, 1e-15);
  EXPECT_NEAR(mtk::ze_numeric(Composition{2, 1}).value, mtk::ze_numeric(Composition{3}).value, 1e-15);
  EXPECT_NEAR(mtk::ze_numeric(Composition{3}).value, 1.2020569031595942854, 1e-15);
  EXPECT_NEAR(mtk::ze_numeric(Composition{5, 3}).value, 0.037707672984847544011, 1e-15);
  EXPECT_EQ(mtk::ze_numeric(Composition{}).value, 1.0);
}

TEST(MzvNumeric, AgreesWithHoelderConvolution) {
  for (int w = 2; w <= 9; ++w) {
    for (const auto& s : mtk::compositions_of_weight(w)) {
      if (s.front() < 2) continue;
      const auto v = mtk::ze_numeric(s);
      EXPECT_NEAR(v.value, oracle::mzv_hoelder(vec(s)), 5e-14) << s;
      EXPECT_LE(v.abs_err, 1e-12);
    }
  }
}

TEST(MzvNumeric, ProductsAndConstants) {
  const mtk::CoeffExpr e = mtk::CoeffExpr::symbol(Composition{2}) * mtk::CoeffExpr::symbol(Composition{3}) +
                           mtk::CoeffExpr(mtk::PiRational::pi_power(2, 1));
  const double ref = oracle::mzv_hoelder({2}) * oracle::mzv_hoelder({3}) + std::numbers::pi * std::numbers::pi;
  EXPECT_NEAR(mtk::mzv_numeric(e).value, ref, 1e-13);
}

TEST(MzvNumeric, RejectsDivergent) {
  EXPECT_THROW(mtk::ze_numeric(Composition{1, 2}), std::invalid_argument);
}

TEST(MzvNumeric, DoublePrecisionContext) {
  mtk::NumericContext ctx;
  ctx.working_precision = 53;
  ctx.target_abs_error = 1e-10;
  EXPECT_NEAR(mtk::ze_numeric(Composition{2, 1, 2}, ctx).value, oracle::mzv_hoelder({2, 1, 2}), 1e-10);
}

TEST(MzvNumeric, ContextValidation) {
  mtk::NumericContext bad;
  bad.target_abs_error = -1;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  mtk::NumericContext cap;
  cap.truncation_cap = 64;
  cap.target_abs_error = 1e-30;
  EXPECT_THROW(mtk::ze_numeric(Composition{2, 1, 1, 1}, cap), mtk::PrecisionUnreachable);
}
