#include "mtk/mzv_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <set>
#include <stdexcept>

namespace mtk {

// ---------------------------------------------------------------- PiRational

PiRational::PiRational(const Rational& c) { add(0, c); }

PiRational PiRational::pi_power(int exponent, const Rational& c) {
  if (exponent < 0 || exponent % 2 != 0) {
    throw std::invalid_argument("pi exponent must be even and nonnegative");
  }
  PiRational p;
  p.add(exponent / 2, c);
  return p;
}

bool PiRational::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational PiRational::coefficient(int m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PiRational::add(int m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PiRational& PiRational::operator+=(const PiRational& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

PiRational& PiRational::operator-=(const PiRational& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

PiRational& PiRational::operator*=(const PiRational& o) {
  PiRational out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [n, d] : o.terms_) out.add(m + n, c * d);
  }
  *this = std::move(out);
  return *this;
}

PiRational& PiRational::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

PiRational PiRational::operator-() const {
  PiRational p = *this;
  p *= Rational(-1);
  return p;
}

long double PiRational::value() const {
  const long double pi2 = std::numbers::pi_v<long double> * std::numbers::pi_v<long double>;
  long double v = 0;
  for (const auto& [m, c] : terms_) v += to_long_double(c) * std::pow(pi2, m);
  return v;
}

namespace {

std::string pi_factor(int m) {
  if (m == 0) return "";
  if (m == 1) return "π^2";
  return "π^" + std::to_string(2 * m);
}

// One signed term "c·X" where X may be empty; returns magnitude text and sign.
std::pair<bool, std::string> signed_term(const Rational& c, const std::string& x) {
  const bool neg = c < 0;
  const Rational a = neg ? Rational(-c) : c;
  std::string out;
  if (x.empty()) {
    out = to_string(a);
  } else if (a == 1) {
    out = x;
  } else {
    out = to_string(a) + "·" + x;
  }
  return {neg, out};
}

std::string join_signed(const std::vector<std::pair<bool, std::string>>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& [neg, text] = parts[i];
    if (i == 0) {
      out += neg ? "-" + text : text;
    } else {
      out += neg ? " - " : " + ";
      out += text;
    }
  }
  return out;
}

}  // namespace

std::string PiRational::str() const {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [m, c] : terms_) parts.push_back(signed_term(c, pi_factor(m)));
  return join_signed(parts);
}

// --------------------------------------------------------------- MzvMonomial

MzvMonomial::MzvMonomial(std::vector<Composition> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.empty() || f.front() < 2) {
      throw std::invalid_argument("monomial factor must have first part >= 2: " + f.str());
    }
  }
  std::sort(factors_.begin(), factors_.end());
}

MzvMonomial MzvMonomial::single(const Composition& s) { return MzvMonomial({s}); }

int MzvMonomial::weight() const {
  int w = 0;
  for (const auto& f : factors_) w += f.weight();
  return w;
}

MzvMonomial MzvMonomial::operator*(const MzvMonomial& o) const {
  std::vector<Composition> f = factors_;
  f.insert(f.end(), o.factors_.begin(), o.factors_.end());
  return MzvMonomial(std::move(f));
}

std::strong_ordering MzvMonomial::operator<=>(const MzvMonomial& o) const {
  if (auto c = weight() <=> o.weight(); c != 0) return c;
  if (auto c = factors_.size() <=> o.factors_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(factors_.begin(), factors_.end(),
                                                o.factors_.begin(), o.factors_.end());
}

std::string MzvMonomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "·";
    out += "Ze[" + factors_[i].str() + "]";
  }
  return out;
}

// ----------------------------------------------------------------- CoeffExpr

CoeffExpr::CoeffExpr(const PiRational& c) { add(MzvMonomial(), c); }

CoeffExpr::CoeffExpr(const MzvMonomial& m, const PiRational& c) { add(m, c); }

CoeffExpr CoeffExpr::symbol(const Composition& s) {
  if (s.empty()) return CoeffExpr(1);
  return CoeffExpr(MzvMonomial::single(s), PiRational(1));
}

PiRational CoeffExpr::constant() const {
  auto it = terms_.find(MzvMonomial());
  return it == terms_.end() ? PiRational() : it->second;
}

std::size_t CoeffExpr::max_degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::vector<int> CoeffExpr::weights() const {
  std::set<int> w;
  for (const auto& [m, c] : terms_) {
    for (const auto& [k, q] : c.terms()) w.insert(m.weight() + 2 * k);
  }
  return {w.begin(), w.end()};
}

void CoeffExpr::add(const MzvMonomial& m, const PiRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoeffExpr& CoeffExpr::operator+=(const CoeffExpr& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

CoeffExpr& CoeffExpr::operator-=(const CoeffExpr& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

CoeffExpr& CoeffExpr::operator*=(const CoeffExpr& o) {
  CoeffExpr out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [n, d] : o.terms_) out.add(m * n, c * d);
  }
  *this = std::move(out);
  return *this;
}

CoeffExpr& CoeffExpr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CoeffExpr CoeffExpr::operator-() const {
  CoeffExpr e = *this;
  e *= Rational(-1);
  return e;
}

std::string CoeffExpr::str() const {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& [m, c] : terms_) {
    const std::string mono = m.is_one() ? "" : m.str();
    for (const auto& [k, q] : c.terms()) {
      std::string x = pi_factor(k);
      if (!mono.empty()) x = x.empty() ? mono : x + "·" + mono;
      parts.push_back(signed_term(q, x));
    }
  }
  return join_signed(parts);
}

// ----------------------------------------------------------- Ze and friends

namespace {

std::mutex extend_mutex;
std::map<Composition, CoeffExpr>& extend_cache() {
  static std::map<Composition, CoeffExpr> cache;
  return cache;
}

}  // namespace

CoeffExpr ze(const Composition& s) {
  if (s.empty()) return CoeffExpr(1);
  if (s.front() >= 2) return CoeffExpr::symbol(s);
  return symmetrel_extend(s);
}

CoeffExpr symmetrel_extend(const Composition& s) {
  if (s.empty()) throw std::invalid_argument("symmetrel extension of the empty sequence");
  if (s.front() >= 2) return CoeffExpr::symbol(s);
  {
    std::lock_guard lock(extend_mutex);
    auto it = extend_cache().find(s);
    if (it != extend_cache().end()) return it->second;
  }
  // s = 1 . u; the stuffle Ze^1 Ze^u contains s with multiplicity k+1,
  // where k+1 is the number of leading ones of s, and Ze^1 = 0.
  const Composition u = s.slice(1, s.length());
  const auto ones = static_cast<long>(s.leading_ones());
  CoeffExpr acc;
  const WordPoly expansion = stuffle(Composition{1}, u);
  for (const auto& [w, m] : expansion.terms()) {
    if (w == s) continue;
    acc += Rational(m) * ze(w);
  }
  acc *= Rational(-1, ones);
  std::lock_guard lock(extend_mutex);
  extend_cache().emplace(s, acc);
  return acc;
}

CoeffExpr mzv_product(const Composition& a, const Composition& b) {
  CoeffExpr out;
  const WordPoly expansion = stuffle(a, b);
  for (const auto& [w, m] : expansion.terms()) out += Rational(m) * ze(w);
  return out;
}

CoeffExpr ze_minus(const Composition& s) {
  CoeffExpr e = ze(s.reversed());
  if (s.weight() % 2 != 0) e *= Rational(-1);
  return e;
}

CoeffExpr linearize(const CoeffExpr& e) {
  CoeffExpr out;
  for (const auto& [m, c] : e.terms()) {
    if (m.degree() <= 1) {
      out.add(m, c);
      continue;
    }
    WordPoly prod(Composition{}, 1);
    for (const auto& f : m.factors()) prod = stuffle(prod, WordPoly(f));
    for (const auto& [w, mult] : prod.terms()) {
      out.add(MzvMonomial::single(w), c * PiRational(Rational(mult)));
    }
  }
  return out;
}

Rational pi_power_in_zeta(int m) {
  if (m < 1) throw std::invalid_argument("pi_power_in_zeta needs m >= 1");
  // Ze^(2m) = (-1)^(m+1) B_2m (2 pi)^(2m) / (2 (2m)!)
  BigInt two_pow = 1;
  mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(), static_cast<unsigned long>(2 * m));
  Rational zeta_over_pi = Rational(sign_pow(m + 1)) * bernoulli(static_cast<unsigned>(2 * m)) *
                          Rational(two_pow) /
                          Rational(BigInt(2 * factorial(static_cast<unsigned>(2 * m))));
  Rational r = 1 / zeta_over_pi;
  r.canonicalize();
  return r;
}

bool newton_relation_check(int omega, int p) {
  if (omega < 1 || p < 0) throw std::invalid_argument("newton_relation_check: bad arguments");
  const auto P = static_cast<std::size_t>(p);
  const WordPoly lhs = stuffle(repeated(omega, P), Composition{omega});
  WordPoly rhs(repeated(omega, P + 1), p + 1);
  for (std::size_t k = 0; k < P; ++k) {
    rhs.add(repeated(omega, k).concat(Composition{2 * omega}).concat(repeated(omega, P - k - 1)), 1);
  }
  return lhs == rhs;
}

}  // namespace mtk
