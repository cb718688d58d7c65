#pragma once

#include "mtk/mzv_algebra.hpp"
#include "mtk/numeric_context.hpp"

namespace mtk {

/// Ze^s for s with first part >= 2 (the empty sequence gives 1).
RealEstimate ze_numeric(const Composition& s, const NumericContext& ctx = {});

/// Numeric value of an exact scalar; leading-one factors are not allowed
/// (CoeffExpr monomials never carry them).
RealEstimate mzv_numeric(const CoeffExpr& expr, const NumericContext& ctx = {});

}  // namespace mtk
