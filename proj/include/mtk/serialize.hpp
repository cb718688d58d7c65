#pragma once

// JSON forms of the exact objects and of the runtime configuration.

#include <optional>
#include <string>

#include <json.hpp>

#include "mtk/combo.hpp"
#include "mtk/mzv_algebra.hpp"
#include "mtk/numeric_context.hpp"
#include "mtk/reduction.hpp"

namespace mtk {

using Json = nlohmann::ordered_json;

Json composition_to_json(const Composition& s);
Composition composition_from_json(const Json& j);

/// {"terms":[{"pi2":m,"coef":"p/q","mzv":[[2,1],[3]]}, ...]}
Json to_json(const CoeffExpr& e);
CoeffExpr coeff_expr_from_json(const Json& j);

/// {"sequence":[..],"class":..,"constant":CoeffExpr,"coefficients":[{"k":k,"value":CoeffExpr}],"text":..}
Json to_json(const ReductionResult& r);
ReductionResult reduction_from_json(const Json& j);

/// {"terms":[{"sequence":[3,2],"coef":"1/6"}, ...]}
Json to_json(const MtCombo& c);
MtCombo combo_from_json(const Json& j);

struct Config {
  NumericContext numeric;
  std::optional<std::string> basis_table;
  int weight_cap = 10;
};

/// Keys: precision, target_abs_error, truncation_cap, guard_band,
/// basis_table, weight_cap. Unknown keys are rejected.
Config config_from_json(const Json& j);
Config load_config(const std::string& path);

}  // namespace mtk
