#pragma once

// Randomized numeric property suites shared by the CLI and the tests.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mtk/numeric_context.hpp"
#include "mtk/numerics.hpp"

namespace mtk {

enum class Suite { Symmetrel, Parity, Diff, Flatness, Trifact };

Suite parse_suite(std::string_view name);
std::string_view to_string(Suite s);

struct SuiteOptions {
  NumericContext numeric = NumericContext{}.with_target(1e-10);
  std::uint64_t seed = 0x5eed;
  /// Random points per identity.
  std::size_t samples = 2;
  int max_weight = 8;
  double tolerance = 1e-7;
};

struct SuiteFailure {
  std::string identity;
  Complex z;
  double deviation;
};

struct SuiteReport {
  Suite suite = Suite::Symmetrel;
  std::size_t checks = 0;
  double max_deviation = 0;
  std::vector<SuiteFailure> failures;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Symmetrel:  Te^a Te^b = sum over the stuffle of a and b.
/// Parity:     Te^s(-z) = (-1)^||s|| Te^{reverse s}(z).
/// Diff:       a Cauchy-integral derivative of Te^s against the
///             derivation rule.
/// Flatness:   both upper bounds and the e^{-2 pi |y|} decay at 20 points
///             of the line Re z = 0.3 with |y| = 1, 1.25, ..., 3.25.
/// Trifact:    Te^s = sum He_+ Ce He_- over deconcatenations.
/// Every convergent sequence (pair) with total weight <= max_weight is
/// covered; Diff stops one weight below so the derivatives stay in range.
SuiteReport run_suite(Suite suite, const SuiteOptions& opts = {});

}  // namespace mtk
