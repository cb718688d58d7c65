#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mtk/errors.hpp"
#include "mtk/mzv_numeric.hpp"
#include "mtk/numerics.hpp"
#include "oracles.hpp"

using mtk::Complex;
using mtk::Composition;
using mtk::Rational;

namespace {

const double pi = std::numbers::pi;

Complex cot(Complex z) { return std::cos(z) / std::sin(z); }

std::vector<Complex> points() {
  return {{0.2, 0.5}, {-0.37, 0.8}, {0.45, 1.1}, {0.1, -0.6}, {0.3, 2.5}, {7.25, 0.4}, {0.5, 0.05}};
}

}  // namespace

TEST(CotPoly, FirstPolynomials) {
  const auto& p2 = mtk::CotPoly::monotangent(2);
  EXPECT_EQ(p2.coefficients(), (std::vector<Rational>{1, 0, 1}));
  const auto& p3 = mtk::CotPoly::monotangent(3);
  EXPECT_EQ(p3.coefficients(), (std::vector<Rational>{0, 1, 0, 1}));
  EXPECT_EQ(mtk::CotPoly::monotangent(4), p3.next());
  EXPECT_EQ(mtk::CotPoly::monotangent(7).degree(), 7);
  EXPECT_THROW(mtk::CotPoly::monotangent(0), std::invalid_argument);
}

TEST(Monotangent, ClosedForms) {
  for (const Complex z : points()) {
    const Complex c = cot(pi * z);
    const Complex s2 = 1.0 / (std::sin(pi * z) * std::sin(pi * z));
    EXPECT_LE(std::abs(mtk::monotangent_eval(1, z).value - pi * c), 1e-12 * std::abs(pi * c) + 1e-13);
    EXPECT_LE(std::abs(mtk::monotangent_eval(2, z).value - pi * pi * s2), 1e-12 * std::abs(pi * pi * s2) + 1e-13);
    const Complex t3 = pi * pi * pi * c * s2;
    EXPECT_LE(std::abs(mtk::monotangent_eval(3, z).value - t3), 1e-12 * std::abs(t3) + 1e-13);
  }
}

TEST(Monotangent, PeriodicAndParity) {
  const Complex z(0.23, 0.7);
  for (int k = 1; k <= 8; ++k) {
    const auto a = mtk::monotangent_eval(k, z).value;
    EXPECT_LE(std::abs(mtk::monotangent_eval(k, z + 3.0).value - a), 1e-11 * std::abs(a));
    EXPECT_LE(std::abs(mtk::monotangent_eval(k, -z).value - static_cast<double>(mtk::sign_pow(k)) * a), 1e-11 * std::abs(a));
  }
}

TEST(Monotangent, SymmetricPartialSums) {
  // sum_{|n| <= N} (n+z)^-4 with the remaining tail of size ~ 2/(3 N^3)
  const Complex z(0.3, 0.4);
  Complex s(0);
  const int N = 2000;
  for (int n = -N; n <= N; ++n) s += std::pow(Complex(n) + z, -4);
  EXPECT_LE(std::abs(mtk::monotangent_eval(4, z).value - s), 1e-9);
}

TEST(Multitangent, DirectClosedForms) {
  for (const Complex z : points()) {
    const Complex t2 = mtk::monotangent_eval(2, z).value;
    const auto v22 = mtk::multitangent_eval_direct(Composition{2, 2}, z);
    EXPECT_LE(std::abs(v22.value - pi * pi / 3 * t2), 1e-10 * std::max(1.0, std::abs(t2))) << z;
    EXPECT_LE(std::abs(mtk::multitangent_eval_direct(Composition{2, 1, 2}, z).value), 1e-10) << z;
  }
}

TEST(Multitangent, NaiveBilateralSum) {
  // Brute-force sum over |n| <= 200 for Te^{3,3}: the neglected part is O(200^-2).
  const Complex z(0.15, 0.8);
  const int N = 200;
  Complex total(0);
  for (int n1 = -N; n1 <= N; ++n1) {
    for (int n2 = -N; n2 < n1; ++n2) total += std::pow(Complex(n1) + z, -3) * std::pow(Complex(n2) + z, -3);
  }
  EXPECT_LE(std::abs(mtk::multitangent_eval_direct(Composition{3, 3}, z).value - total), 2e-4);
}

TEST(Multitangent, DomainChecks) {
  EXPECT_THROW(mtk::multitangent_eval_direct(Composition{1, 2}, {0.2, 0.3}), std::invalid_argument);
  EXPECT_THROW(mtk::monotangent_eval(2, {2.0005, 0.0}), mtk::PoleProximityError);
  mtk::NumericContext loose;
  loose.pole_guard = 1e-4;
  EXPECT_NO_THROW(mtk::monotangent_eval(2, {2.0005, 0.0}, loose));
}

TEST(Hurwitz, ClosedForms) {
  const double z2 = pi * pi / 6;
  EXPECT_NEAR(mtk::hurwitz_eval(mtk::Side::Plus, Composition{2}, 0.0).value.real(), z2, 1e-13);
  EXPECT_NEAR(mtk::hurwitz_eval(mtk::Side::Plus, Composition{2}, 1.0).value.real(), z2 - 1, 1e-13);
  EXPECT_NEAR(mtk::hurwitz_eval(mtk::Side::Plus, Composition{2}, -0.5).value.real(), pi * pi / 2, 1e-12);
  EXPECT_NEAR(mtk::hurwitz_eval(mtk::Side::Plus, Composition{3}, -0.5).value.real(),
              7 * oracle::mzv_hoelder({3}), 1e-12);
  EXPECT_NEAR(mtk::hurwitz_eval(mtk::Side::Plus, Composition{2, 1}, 0.0).value.real(), oracle::mzv_hoelder({2, 1}),
              1e-12);
  EXPECT_NEAR(mtk::hurwitz_eval(mtk::Side::Plus, Composition{1}, 1.0).value.real(), -1.0, 1e-13);
  // He_-^{(2)}(z) = sum_{n<0} (n+z)^-2 = He_+^{(2)}(-z)
  const Complex z(0.3, 0.2);
  EXPECT_LE(std::abs(mtk::hurwitz_eval(mtk::Side::Minus, Composition{2}, z).value -
                     mtk::hurwitz_eval(mtk::Side::Plus, Composition{2}, -z).value),
            1e-13);
}

TEST(Hurwitz, TrifactorizationResidual) {
  for (const auto& s : {Composition{2}, Composition{3}, Composition{2, 2}, Composition{3, 2}, Composition{2, 3},
                        Composition{2, 1, 3}, Composition{3, 1, 1, 2}}) {
    for (const Complex z : points()) {
      EXPECT_LE(mtk::trifactorization_residual(s, z).value, 1e-9 * std::max(1.0, std::abs(mtk::multitangent_eval_direct(s, z).value)))
          << s << " " << z;
    }
  }
}

TEST(Fourier, CoefficientsOfMonotangents) {
  // pi^2 / sin^2(pi z) = -4 pi^2 sum n q^n;  Te^3 = -Te^2' / 2.
  for (long n = 1; n <= 5; ++n) {
    const auto c2 = mtk::fourier_coefficient(Composition{2}, n);
    EXPECT_NEAR(c2.value.real(), 4 * pi * pi * n, 1e-10 * n);
    EXPECT_NEAR(c2.value.imag(), 0, 1e-10);
    const auto c3 = mtk::fourier_coefficient(Composition{3}, n);
    EXPECT_NEAR(c3.value.real(), 0, 1e-9);
    EXPECT_NEAR(c3.value.imag(), -4 * pi * pi * pi * n * n, 1e-9 * n * n);
  }
}

TEST(Fourier, PartialSumsWithinTailBound) {
  for (const auto& s : {Composition{2}, Composition{2, 2}, Composition{3, 2}, Composition{2, 1, 2}, Composition{2, 3, 2}}) {
    const Complex z(0.17, 1.5);
    const Complex ref = s.length() == 1 ? mtk::monotangent_eval(s[0], z).value : mtk::multitangent_eval_direct(s, z).value;
    for (long N = 0; N <= 6; ++N) {
      const Complex p = mtk::fourier_partial_sum(s, z, N);
      const double bound = mtk::fourier_tail_bound(s, z.imag(), N);
      EXPECT_LE(std::abs(p - ref), bound * (1 + 1e-6) + 1e-14) << s << " N=" << N;
    }
  }
}

TEST(Bounds, NoViolationsOnVerticalLine) {
  std::vector<Complex> line;
  for (int j = 0; j < 10; ++j) {
    line.emplace_back(0.41, 1 + 0.3 * j);
    line.emplace_back(0.41, -1 - 0.3 * j);
  }
  line.emplace_back(0.2, 0.5);
  for (const auto& s : {Composition{2}, Composition{2, 2}, Composition{3, 2}, Composition{2, 1, 3}, Composition{2, 2, 2}}) {
    const auto rep = mtk::flatness_and_bounds_check(s, line);
    EXPECT_TRUE(rep.ok()) << s;
    EXPECT_GE(rep.checks, line.size());
  }
  EXPECT_DOUBLE_EQ(mtk::first_upper_bound(Composition{2, 2}, 2.0), 8.0 / 2.0);
  EXPECT_DOUBLE_EQ(mtk::second_upper_bound(Composition{2, 2}, 4.0), 0.5);
}
