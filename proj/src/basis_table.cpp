#include "mtk/basis_table.hpp"

#include <cmath>
#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mtk/errors.hpp"
#include "mtk/mzv_numeric.hpp"
#include "mtk/serialize.hpp"

#ifndef MTK_DEFAULT_TABLE
#define MTK_DEFAULT_TABLE "data/mzv_table.json"
#endif

namespace mtk {

namespace {

constexpr double kVerifyTolerance = 1e-10;

std::mutex& default_mutex() {
  static std::mutex m;
  return m;
}

std::string& default_path_ref() {
  static std::string p = MTK_DEFAULT_TABLE;
  return p;
}

MzvMonomial monomial_from_json(const Json& j) {
  std::vector<Composition> factors;
  for (const auto& f : j) {
    Composition s = composition_from_json(f);
    if (s.empty() || s.front() < 2) throw std::invalid_argument("basis factor must start with a part >= 2");
    factors.push_back(std::move(s));
  }
  return MzvMonomial(std::move(factors));
}

void add_to(BasisForm& f, const MzvMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = f.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) f.erase(it);
  }
}

CoeffExpr as_expr(const BasisForm& f) {
  CoeffExpr e;
  for (const auto& [m, c] : f) e.add(m, PiRational(c));
  return e;
}

}  // namespace

MzvBasisTable MzvBasisTable::from_json_text(const std::string& text, bool verify, const NumericContext& ctx) {
  const Json j = Json::parse(text);
  MzvBasisTable t;
  t.max_weight_ = j.at("max_weight").get<int>();
  if (t.max_weight_ < 0) throw std::invalid_argument("max_weight must be nonnegative");
  t.provenance_ = j.value("provenance", std::string());
  t.basis_[0] = {MzvMonomial()};
  for (int w = 1; w <= t.max_weight_; ++w) t.basis_[w] = {};
  for (const auto& [key, list] : j.at("basis").items()) {
    const int w = std::stoi(key);
    if (w < 1 || w > t.max_weight_) throw std::invalid_argument("basis weight out of range: " + key);
    for (const auto& mj : list) {
      MzvMonomial m = monomial_from_json(mj);
      if (m.weight() != w) throw std::invalid_argument("basis monomial " + m.str() + " is not of weight " + key);
      t.basis_[w].push_back(std::move(m));
    }
  }
  for (const auto& ej : j.at("entries")) {
    Composition word = composition_from_json(ej.at("word"));
    if (word.empty() || word.front() < 2 || word.weight() > t.max_weight_) {
      throw std::invalid_argument("bad table word: " + word.str());
    }
    const CoeffExpr v = coeff_expr_from_json(ej.at("value"));
    const auto& allowed = t.basis_.at(word.weight());
    Entry e;
    e.provenance = ej.value("provenance", std::string());
    for (const auto& [m, pr] : v.terms()) {
      if (!pr.is_rational()) throw std::invalid_argument("table entries must have rational coefficients");
      if (std::find(allowed.begin(), allowed.end(), m) == allowed.end()) {
        throw std::invalid_argument("entry for " + word.str() + " uses non-basis monomial " + m.str());
      }
      add_to(e.value, m, pr.coefficient(0));
    }
    if (!t.entries_.emplace(word, std::move(e)).second) {
      throw std::invalid_argument("duplicate table word: " + word.str());
    }
  }
  for (int w = 2; w <= t.max_weight_; ++w) {
    for (const auto& s : compositions_of_weight(w)) {
      if (s.front() >= 2 && !t.entries_.count(s)) {
        throw std::invalid_argument("table is missing the word " + s.str());
      }
    }
  }
  if (verify) {
    const double dev = t.verify(ctx);
    if (!(dev <= kVerifyTolerance)) {
      std::ostringstream msg;
      msg << "MZV table failed numeric verification (max deviation " << dev << ")";
      throw IntegrityError(msg.str());
    }
  }
  return t;
}

MzvBasisTable MzvBasisTable::load(const std::string& path, bool verify, const NumericContext& ctx) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open MZV table: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str(), verify, ctx);
}

const MzvBasisTable& MzvBasisTable::default_table() {
  static const MzvBasisTable table = [] {
    std::lock_guard lock(default_mutex());
    return load(default_path_ref());
  }();
  return table;
}

void MzvBasisTable::set_default_path(const std::string& path) {
  std::lock_guard lock(default_mutex());
  default_path_ref() = path;
}

std::string MzvBasisTable::default_path() {
  std::lock_guard lock(default_mutex());
  return default_path_ref();
}

const std::vector<MzvMonomial>& MzvBasisTable::basis(int weight) const {
  auto it = basis_.find(weight);
  if (it == basis_.end()) {
    throw CoverageError("MZV table covers weights up to " + std::to_string(max_weight_) + ", weight " +
                        std::to_string(weight) + " requested");
  }
  return it->second;
}

const MzvBasisTable::Entry& MzvBasisTable::entry(const Composition& word) const {
  auto it = entries_.find(word);
  if (it != entries_.end()) return it->second;
  if (word.weight() > max_weight_) {
    throw CoverageError("MZV table covers weights up to " + std::to_string(max_weight_) + ", Ze[" + word.str() +
                        "] requested");
  }
  throw std::invalid_argument("no table entry for Ze[" + word.str() + "]");
}

BasisForm MzvBasisTable::normalize(const CoeffExpr& e) const {
  CoeffExpr converted;
  for (const auto& [mono, pr] : e.terms()) {
    for (const auto& [m, c] : pr.terms()) {
      if (m == 0) {
        converted.add(mono, PiRational(c));
      } else {
        converted.add(mono * MzvMonomial::single(Composition{2 * m}), PiRational(c * pi_power_in_zeta(m)));
      }
    }
  }
  BasisForm out;
  const CoeffExpr lin = linearize(converted);
  for (const auto& [mono, pr] : lin.terms()) {
    const Rational c = pr.coefficient(0);
    if (mono.is_one()) {
      add_to(out, mono, c);
      continue;
    }
    for (const auto& [b, q] : entry(mono.factors().front()).value) add_to(out, b, c * q);
  }
  return out;
}

double MzvBasisTable::verify(const NumericContext& ctx) const {
  double worst = 0;
  const NumericContext tight = ctx.with_target(std::min(ctx.target_abs_error, 1e-12));
  for (const auto& [word, e] : entries_) {
    const double lhs = ze_numeric(word, tight).value;
    const double rhs = basis_form_value(e.value, tight).value;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

RealEstimate basis_form_value(const BasisForm& f, const NumericContext& ctx) {
  return mzv_numeric(as_expr(f), ctx);
}

std::string basis_form_str(const BasisForm& f) { return as_expr(f).str(); }

}  // namespace mtk
