#pragma once

#include <complex>
#include <cstdint>

namespace mtk {

struct NumericContext {
  double target_abs_error = 1e-12;
  /// Mantissa bits; 53 selects double, anything larger long double.
  int working_precision = 64;
  /// Largest summation bound any truncated series may use.
  std::int64_t truncation_cap = 1 << 20;
  /// Minimum distance from z to the nearest integer.
  double pole_guard = 1e-3;

  /// Throws std::invalid_argument on a malformed context.
  void validate() const;
  [[nodiscard]] bool extended() const { return working_precision > 53; }
  [[nodiscard]] NumericContext with_target(double target) const {
    NumericContext c = *this;
    c.target_abs_error = target;
    return c;
  }
};

/// A value together with an estimated bound on its absolute error.
template <class T>
struct Estimate {
  T value{};
  double abs_err = 0.0;
};

using RealEstimate = Estimate<double>;
using ComplexEstimate = Estimate<std::complex<double>>;

}  // namespace mtk
