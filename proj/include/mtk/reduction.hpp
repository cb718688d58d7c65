#pragma once

// Reduction of multitangents into monotangents:
//   Te^s = delta^s + sum_k z_k^s Te^k.

#include <map>
#include <string>
#include <vector>

#include "mtk/mzv_algebra.hpp"
#include "mtk/numeric_context.hpp"

namespace mtk {

struct ReductionResult {
  Composition sequence;
  PiRational constant;
  /// Monotangent order k >= 1 -> coefficient; zero coefficients are absent.
  std::map<int, CoeffExpr> coeffs;

  [[nodiscard]] bool is_zero() const { return constant.is_zero() && coeffs.empty(); }
  [[nodiscard]] CoeffExpr coefficient(int k) const;
  [[nodiscard]] int max_order() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }
  /// Every term of coeffs[k] has weight ||s|| - k and the constant weight ||s||.
  [[nodiscard]] bool weight_homogeneous() const;
};

/// Pivot position i (1-based) and the shifts k_l, l != i (k_vec[i-1] ignored).
struct BIndex {
  std::size_t i = 1;
  std::vector<int> k_vec;
};

/// (-1)^(sum_{l<i} k_l) (-1)^(sum_{l>i} s_l) prod_{l != i} C(s_l + k_l - 1, s_l - 1).
BigInt b_coeff(const Composition& s, const BIndex& b);

/// All BIndex with pivot i and sum_{l != i} k_l = k, in lexicographic order.
std::vector<BIndex> enumerate_bindex(const Composition& s, std::size_t i, int k);

/// Z_{i,k}: sum_B B * Ze^{s_r+k_r, ..., s_{i+1}+k_{i+1}} * Ze^{s_1+k_1, ..., s_{i-1}+k_{i-1}}.
/// Factors with a leading one are replaced by their symmetrel extension.
CoeffExpr z_coeff(std::size_t i, int k, const Composition& s);

/// (i pi)^r / r! for s = 1^[r] with r even, zero otherwise.
PiRational delta(const Composition& s);

/// Exact reduction; the Te^1 coefficient of convergent sequences is kept as
/// produced (see assert_clean).
ReductionResult reduce(const Composition& s);

/// Numeric value of the Te^1 coefficient of a convergent sequence.
RealEstimate te1_identity_residual(const Composition& s, const NumericContext& ctx = {});

/// For convergent s, checks that the Te^1 coefficient vanishes numerically
/// and removes it; throws IntegrityError otherwise. Divergent inputs are
/// returned unchanged.
ReductionResult assert_clean(const ReductionResult& r, const NumericContext& ctx = {});

/// reduce() followed by assert_clean().
ReductionResult reduce_clean(const Composition& s, const NumericContext& ctx = {});

/// "Te[2,2] = 2·Ze[2]·Te^2".
std::string reduction_text(const ReductionResult& r);

}  // namespace mtk
