#pragma once

// Numerical evaluation of monotangents, multitangents and Hurwitz
// multizeta functions, together with the Fourier and growth checks.

#include <complex>
#include <string>
#include <vector>

#include "mtk/numeric_context.hpp"
#include "mtk/rational.hpp"
#include "mtk/reduction.hpp"
#include "mtk/words.hpp"

namespace mtk {

using Complex = std::complex<double>;

/// Throws PoleProximityError when z is within ctx.pole_guard of an integer.
void check_pole_guard(Complex z, const NumericContext& ctx);

struct GaussRational {
  Rational re;
  Rational im;
};

/// Te^k = pi^k * P_k(cot(pi z)) with rational P_k.
class CotPoly {
 public:
  /// Builds P_k from P_1 = c by P_{k+1} = (1/k)(1 + c^2) P_k'(c).
  static const CotPoly& monotangent(int k);

  [[nodiscard]] int order() const { return order_; }
  /// Coefficients of c^j.
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// The polynomial of Te^{k+1} obtained by the derivation rule.
  [[nodiscard]] CotPoly next() const;
  /// P_k(c0 + d) as a polynomial in d, for c0 = -i (upper = true) or +i.
  [[nodiscard]] const std::vector<GaussRational>& shifted(bool upper) const;

  bool operator==(const CotPoly& o) const { return order_ == o.order_ && coeffs_ == o.coeffs_; }

 private:
  CotPoly(int order, std::vector<Rational> coeffs);
  int order_;
  std::vector<Rational> coeffs_;
  mutable std::vector<GaussRational> upper_;
  mutable std::vector<GaussRational> lower_;
};

ComplexEstimate monotangent_eval(int k, Complex z, const NumericContext& ctx = {});

/// Truncated bilateral nested sum for s with s_1, s_r >= 2.
ComplexEstimate multitangent_eval_direct(const Composition& s, Complex z, const NumericContext& ctx = {});

/// Evaluates the reduction into monotangents. The Te^1 coefficient of a
/// convergent sequence is dropped after its numeric vanishing check.
ComplexEstimate multitangent_eval_reduced(const Composition& s, Complex z, const NumericContext& ctx = {});

/// Same as multitangent_eval_reduced for an already computed reduction.
ComplexEstimate evaluate_reduction(const ReductionResult& r, Complex z, const NumericContext& ctx = {});

enum class Side { Plus, Minus };

/// He_+^s(z) = sum_{n_1 > ... > n_r > 0} prod (n_i + z)^(-s_i) and
/// He_-^s(z) = sum_{0 > n_1 > ... > n_r} prod (n_i + z)^(-s_i); the length-1
/// sequence (1) uses the subtracted series.
ComplexEstimate hurwitz_eval(Side side, const Composition& s, Complex z, const NumericContext& ctx = {});

/// |Te^s(z) - sum He_+^{s1}(z) Ce^{s2}(z) He_-^{s3}(z)| over deconcatenations.
RealEstimate trifactorization_residual(const Composition& s, Complex z, const NumericContext& ctx = {});

/// T^_n^s; for Im z > 0, Te^s(z) = -sum_{n>0} T^_n q^n with q = e^{2 i pi z}.
ComplexEstimate fourier_coefficient(const Composition& s, long n, const NumericContext& ctx = {});

/// -sum_{n=1}^{N} T^_n q^n.
Complex fourier_partial_sum(const Composition& s, Complex z, long N, const NumericContext& ctx = {});

/// Upper bound for sum_{n>N} |T^_n| |q|^n at Im z = y.
double fourier_tail_bound(const Composition& s, double y, long N, const NumericContext& ctx = {});

struct BoundViolation {
  Complex z;
  std::string check;
  double value;
  double bound;
};

struct BoundsReport {
  Composition sequence;
  std::size_t checks = 0;
  std::vector<BoundViolation> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// 4 l / |Im z|^(||s|| - l - 1).
double first_upper_bound(const Composition& s, double im);
/// (1/l!) (2 / sqrt|Im z|)^||s||, for valuation at least 2 and |z| >= 1.
double second_upper_bound(const Composition& s, double im);

/// Checks both upper bounds at each sample and the exponential flatness
/// |Te^s(x+iy)| e^{2 pi |y|} <= M(1) for |y| >= 1.
BoundsReport flatness_and_bounds_check(const Composition& s, const std::vector<Complex>& samples,
                                       const NumericContext& ctx = {});

}  // namespace mtk
