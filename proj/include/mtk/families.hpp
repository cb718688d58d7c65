#pragma once

// Closed-form families: Te^{1^[r]}, Te^{n^[k]}, Ze^{2^[n]} and the sine
// product generating series.

#include <complex>
#include <cstdint>
#include <vector>

#include "mtk/mzv_algebra.hpp"
#include "mtk/numeric_context.hpp"

namespace mtk {

/// A sign vector (e_1, ..., e_n) with entries +1 or -1.
class EpsilonWord {
 public:
  explicit EpsilonWord(std::vector<int> entries);
  /// Entry k is -1 iff bit k of mask is set.
  static EpsilonWord from_mask(std::size_t n, std::uint64_t mask);

  [[nodiscard]] const std::vector<int>& entries() const { return entries_; }
  [[nodiscard]] std::size_t length() const { return entries_.size(); }
  /// prod e_k
  [[nodiscard]] int sg() const;
  /// sum e_k
  [[nodiscard]] int s() const;
  /// sum e_k exp((2k - 1) i pi / n)
  [[nodiscard]] std::complex<long double> e() const;

 private:
  std::vector<int> entries_;
};

struct OnesClosedForm {
  PiRational constant;
  PiRational te1_coeff;
};

/// Te^{1^[r]} = constant + te1_coeff * Te^1.
OnesClosedForm te_ones_closed_form(int r);

/// Te^{n^[k]}(z) from the 2^n-term sign sum. Throws IntegrityError when the
/// grouped sign-sum coefficients fail to be real.
ComplexEstimate te_nk_closed_form(int n, int k, std::complex<double> z, const NumericContext& ctx = {});

/// pi^(2n) / (2n+1)!
PiRational zagier_ze2n(int n);

/// Compares Exp(-sum_n Ze^(2n) X^(2n) / n) with sin(pi X)/(pi X) up to
/// X^(2 order); exact for order <= 3, numeric (relative tolerance) beyond.
bool sin_product_series_check(int order, const NumericContext& ctx = {}, double* max_rel_dev = nullptr);

}  // namespace mtk
