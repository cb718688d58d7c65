#include "mtk/reduction.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mtk/errors.hpp"
#include "mtk/mzv_numeric.hpp"

namespace mtk {

CoeffExpr ReductionResult::coefficient(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? CoeffExpr() : it->second;
}

bool ReductionResult::weight_homogeneous() const {
  const int w = sequence.weight();
  for (const auto& [m, c] : constant.terms()) {
    if (2 * m != w) return false;
  }
  for (const auto& [k, e] : coeffs) {
    for (int ew : e.weights()) {
      if (ew != w - k) return false;
    }
  }
  return true;
}

BigInt b_coeff(const Composition& s, const BIndex& b) {
  const std::size_t r = s.length();
  if (b.i < 1 || b.i > r || b.k_vec.size() != r) throw std::invalid_argument("b_coeff: bad index");
  long before = 0;
  long after = 0;
  BigInt prod = 1;
  for (std::size_t l = 0; l < r; ++l) {
    if (l + 1 == b.i) continue;
    const int kl = b.k_vec[l];
    if (kl < 0) throw std::invalid_argument("b_coeff: negative shift");
    if (l + 1 < b.i) before += kl;
    else after += s[l];
    prod *= binomial(s[l] + kl - 1, s[l] - 1);
  }
  return sign_pow(before) * sign_pow(after) * prod;
}

std::vector<BIndex> enumerate_bindex(const Composition& s, std::size_t i, int k) {
  const std::size_t r = s.length();
  std::vector<BIndex> out;
  if (i < 1 || i > r || k < 0) return out;
  std::vector<int> kv(r, 0);
  std::vector<std::size_t> slots;
  for (std::size_t l = 0; l < r; ++l) {
    if (l + 1 != i) slots.push_back(l);
  }
  if (slots.empty()) {
    if (k == 0) out.push_back({i, kv});
    return out;
  }
  // Weak compositions of k into |slots| parts, lexicographic by slot order.
  auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
    if (idx + 1 == slots.size()) {
      kv[slots[idx]] = left;
      out.push_back({i, kv});
      return;
    }
    for (int v = 0; v <= left; ++v) {
      kv[slots[idx]] = v;
      self(self, idx + 1, left - v);
    }
  };
  rec(rec, 0, k);
  return out;
}

CoeffExpr z_coeff(std::size_t i, int k, const Composition& s) {
  const std::size_t r = s.length();
  if (i < 1 || i > r) throw std::invalid_argument("z_coeff: pivot out of range");
  if (k < 0 || k > s[i - 1] - 1) throw std::invalid_argument("z_coeff: shift out of range");
  CoeffExpr out;
  for (const auto& b : enumerate_bindex(s, i, k)) {
    const BigInt coef = b_coeff(s, b);
    if (coef == 0) continue;
    std::vector<int> right;
    for (std::size_t l = r; l > i; --l) right.push_back(s[l - 1] + b.k_vec[l - 1]);
    std::vector<int> left;
    for (std::size_t l = 1; l < i; ++l) left.push_back(s[l - 1] + b.k_vec[l - 1]);
    CoeffExpr term = ze(Composition(std::move(right))) * ze(Composition(std::move(left)));
    term *= Rational(coef);
    out += term;
  }
  return out;
}

PiRational delta(const Composition& s) {
  const auto r = static_cast<long>(s.length());
  if (s.empty() || !s.all_ones() || r % 2 != 0) return {};
  return PiRational::pi_power(static_cast<int>(r),
                              Rational(sign_pow(r / 2)) / Rational(factorial(static_cast<unsigned>(r))));
}

ReductionResult reduce(const Composition& s) {
  if (s.empty()) throw std::invalid_argument("reduce: the empty sequence is the mould unit");
  ReductionResult res;
  res.sequence = s;
  res.constant = delta(s);
  for (std::size_t i = 1; i <= s.length(); ++i) {
    const int si = s[i - 1];
    for (int k = 1; k <= si; ++k) {
      CoeffExpr z = z_coeff(i, si - k, s);
      if (z.is_zero()) continue;
      auto [it, inserted] = res.coeffs.try_emplace(k, z);
      if (!inserted) {
        it->second += z;
        if (it->second.is_zero()) res.coeffs.erase(it);
      }
    }
  }
  return res;
}

RealEstimate te1_identity_residual(const Composition& s, const NumericContext& ctx) {
  if (!is_multitangent_convergent(s)) {
    throw std::invalid_argument("te1_identity_residual needs a convergent sequence: " + s.str());
  }
  CoeffExpr c;
  for (std::size_t i = 1; i <= s.length(); ++i) c += z_coeff(i, s[i - 1] - 1, s);
  return mzv_numeric(c, ctx);
}

ReductionResult assert_clean(const ReductionResult& r, const NumericContext& ctx) {
  if (!is_multitangent_convergent(r.sequence)) return r;
  ReductionResult out = r;
  auto it = out.coeffs.find(1);
  if (it == out.coeffs.end()) return out;
  const auto v = mzv_numeric(it->second, ctx);
  const double tol = ctx.target_abs_error * static_cast<double>(std::max<std::size_t>(1, it->second.size()));
  if (std::abs(v.value) > tol) {
    std::ostringstream msg;
    msg << "Te^1 coefficient of Te[" << r.sequence.str() << "] does not vanish: " << v.value;
    throw IntegrityError(msg.str());
  }
  out.coeffs.erase(it);
  return out;
}

ReductionResult reduce_clean(const Composition& s, const NumericContext& ctx) {
  return assert_clean(reduce(s), ctx);
}

namespace {

bool single_term(const CoeffExpr& e) {
  return e.size() == 1 && e.terms().begin()->second.terms().size() == 1;
}

}  // namespace

std::string reduction_text(const ReductionResult& r) {
  std::string out = "Te[" + r.sequence.str() + "] = ";
  std::vector<std::string> parts;
  if (!r.constant.is_zero()) parts.push_back(r.constant.str());
  for (const auto& [k, e] : r.coeffs) {
    const std::string mono = "Te^" + std::to_string(k);
    if (e == CoeffExpr(1)) {
      parts.push_back(mono);
    } else if (e == CoeffExpr(-1)) {
      parts.push_back("-" + mono);
    } else if (single_term(e)) {
      parts.push_back(e.str() + "·" + mono);
    } else {
      parts.push_back("(" + e.str() + ")·" + mono);
    }
  }
  if (parts.empty()) return out + "0";
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (j == 0) {
      out += parts[j];
    } else if (parts[j].front() == '-') {
      out += " - " + parts[j].substr(1);
    } else {
      out += " + " + parts[j];
    }
  }
  return out;
}

}  // namespace mtk
