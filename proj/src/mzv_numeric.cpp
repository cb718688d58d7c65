#include "mtk/mzv_numeric.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "detail/nested_sums.hpp"

namespace mtk {

void NumericContext::validate() const {
  if (!(target_abs_error > 0)) throw std::invalid_argument("target_abs_error must be positive");
  if (truncation_cap < 10) throw std::invalid_argument("truncation_cap must be at least 10");
  if (working_precision < 24) throw std::invalid_argument("working_precision too small");
  if (!(pole_guard > 0)) throw std::invalid_argument("pole_guard must be positive");
}

namespace {

constexpr std::int64_t kMzvHead = 16;

std::mutex cache_mutex;
std::map<std::tuple<Composition, double, bool>, RealEstimate> cache;

template <class Real>
RealEstimate ze_engine(const Composition& s, const NumericContext& ctx) {
  const auto v = detail::hurwitz_plus<Real>(s, Real(0), ctx, kMzvHead);
  return {static_cast<double>(v.value), v.err + std::abs(static_cast<double>(v.value)) * 1.2e-16};
}

}  // namespace

RealEstimate ze_numeric(const Composition& s, const NumericContext& ctx) {
  ctx.validate();
  if (s.empty()) return {1.0, 0.0};
  if (s.front() < 2) throw std::invalid_argument("ze_numeric needs first part >= 2: " + s.str());
  const auto key = std::make_tuple(s, ctx.target_abs_error, ctx.extended());
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // The final rounding to double dominates below ~1e-16 relative, so the
  // sum itself is asked for a little more than the caller needs.
  const NumericContext inner = ctx.with_target(ctx.target_abs_error / 2);
  RealEstimate r = ctx.extended() ? ze_engine<long double>(s, inner) : ze_engine<double>(s, inner);
  std::lock_guard lock(cache_mutex);
  cache.emplace(key, r);
  return r;
}

RealEstimate mzv_numeric(const CoeffExpr& expr, const NumericContext& ctx) {
  ctx.validate();
  double factor_target = ctx.target_abs_error / 8;
  for (int attempt = 0; attempt < 6; ++attempt) {
    long double total = 0;
    double err = 0;
    const NumericContext fctx = ctx.with_target(factor_target);
    for (const auto& [mono, coef] : expr.terms()) {
      const long double c = coef.value();
      long double prod = 1;
      std::vector<RealEstimate> fs;
      for (const auto& f : mono.factors()) {
        fs.push_back(ze_numeric(f, fctx));
        prod *= fs.back().value;
      }
      double e = 0;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        long double others = 1;
        for (std::size_t j = 0; j < fs.size(); ++j) {
          if (j != i) others *= std::abs(fs[j].value) + fs[j].abs_err;
        }
        e += fs[i].abs_err * static_cast<double>(others);
      }
      total += c * prod;
      err += static_cast<double>(std::abs(c)) * e +
             static_cast<double>(std::abs(c * prod)) * 1e-18;
    }
    if (err <= ctx.target_abs_error || factor_target < 1e-30) {
      if (err > ctx.target_abs_error) {
        throw PrecisionUnreachable("mzv_numeric could not reach target", err);
      }
      return {static_cast<double>(total), err + std::abs(static_cast<double>(total)) * 1.2e-16};
    }
    factor_target *= std::max(1e-6, 0.5 * ctx.target_abs_error / err);
  }
  throw PrecisionUnreachable("mzv_numeric could not reach target", factor_target);
}

}  // namespace mtk
