#pragma once

// Exact scalars built from rationals, even powers of pi and products of
// multizeta symbols Ze^s.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mtk/rational.hpp"
#include "mtk/words.hpp"

namespace mtk {

/// Sum of c_m * pi^(2m) with rational c_m.
class PiRational {
 public:
  PiRational() = default;
  PiRational(const Rational& c);  // NOLINT: a rational is a pi^0 term
  PiRational(long c) : PiRational(Rational(c)) {}  // NOLINT

  /// c * pi^exponent; exponent must be even and nonnegative.
  static PiRational pi_power(int exponent, const Rational& c = 1);

  /// Keyed by m for the power pi^(2m).
  [[nodiscard]] const std::map<int, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_rational() const;
  /// Coefficient of pi^(2m).
  [[nodiscard]] Rational coefficient(int m) const;
  void add(int m, const Rational& c);

  PiRational& operator+=(const PiRational& o);
  PiRational& operator-=(const PiRational& o);
  PiRational& operator*=(const PiRational& o);
  PiRational& operator*=(const Rational& c);
  friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
  friend PiRational operator-(PiRational a, const PiRational& b) { return a -= b; }
  friend PiRational operator*(PiRational a, const PiRational& b) { return a *= b; }
  PiRational operator-() const;
  bool operator==(const PiRational& o) const = default;

  /// Numeric value with pi at long double precision.
  [[nodiscard]] long double value() const;
  /// "-1/2·π^2"; "0" when empty.
  [[nodiscard]] std::string str() const;

 private:
  std::map<int, Rational> terms_;
};

/// A product of multizeta symbols; every factor has first part >= 2.
/// The empty product is 1.
class MzvMonomial {
 public:
  MzvMonomial() = default;
  explicit MzvMonomial(std::vector<Composition> factors);
  static MzvMonomial single(const Composition& s);

  [[nodiscard]] const std::vector<Composition>& factors() const { return factors_; }
  [[nodiscard]] bool is_one() const { return factors_.empty(); }
  [[nodiscard]] std::size_t degree() const { return factors_.size(); }
  [[nodiscard]] int weight() const;
  [[nodiscard]] MzvMonomial operator*(const MzvMonomial& o) const;

  bool operator==(const MzvMonomial& o) const = default;
  std::strong_ordering operator<=>(const MzvMonomial& o) const;

  /// "Ze[2]·Ze[3]"; "1" for the empty product.
  [[nodiscard]] std::string str() const;

 private:
  std::vector<Composition> factors_;  // kept sorted
};

/// Sum over monomials of (PiRational) * monomial. Zero terms are pruned.
/// Products stay formal; see linearize().
class CoeffExpr {
 public:
  using Map = std::map<MzvMonomial, PiRational>;

  CoeffExpr() = default;
  CoeffExpr(const PiRational& c);  // NOLINT
  CoeffExpr(const Rational& c) : CoeffExpr(PiRational(c)) {}  // NOLINT
  CoeffExpr(long c) : CoeffExpr(PiRational(c)) {}  // NOLINT
  CoeffExpr(const MzvMonomial& m, const PiRational& c);

  /// The bare symbol Ze^s; s must be empty or have first part >= 2.
  static CoeffExpr symbol(const Composition& s);

  [[nodiscard]] const Map& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  /// Coefficient of the empty monomial.
  [[nodiscard]] PiRational constant() const;
  /// Largest monomial degree (0 for pure constants and for zero).
  [[nodiscard]] std::size_t max_degree() const;
  /// Set of total weights (pi^2 counts 2) over all terms.
  [[nodiscard]] std::vector<int> weights() const;

  void add(const MzvMonomial& m, const PiRational& c);
  CoeffExpr& operator+=(const CoeffExpr& o);
  CoeffExpr& operator-=(const CoeffExpr& o);
  CoeffExpr& operator*=(const CoeffExpr& o);
  CoeffExpr& operator*=(const Rational& c);
  friend CoeffExpr operator+(CoeffExpr a, const CoeffExpr& b) { return a += b; }
  friend CoeffExpr operator-(CoeffExpr a, const CoeffExpr& b) { return a -= b; }
  friend CoeffExpr operator*(CoeffExpr a, const CoeffExpr& b) { return a *= b; }
  friend CoeffExpr operator*(const Rational& c, CoeffExpr a) { return a *= c; }
  CoeffExpr operator-() const;
  bool operator==(const CoeffExpr& o) const = default;

  /// "2·Ze[2] - 1/2·π^2"; "0" when empty.
  [[nodiscard]] std::string str() const;

 private:
  Map terms_;
};

/// Ze^s for any composition: symbols for first part >= 2, the symmetrel
/// extension with Ze^1 = 0 otherwise, 1 for the empty composition.
CoeffExpr ze(const Composition& s);

/// Stuffle linearization of Ze^a * Ze^b.
CoeffExpr mzv_product(const Composition& a, const Composition& b);

/// Symmetrel value of Ze^s for s with leading ones (Ze^1 = 0), written in
/// convergent symbols. Sequences without leading ones map to their symbol.
CoeffExpr symmetrel_extend(const Composition& s);

/// Ze_-^s = (-1)^||s|| Ze^(reverse s).
CoeffExpr ze_minus(const Composition& s);

/// Rewrites every product of symbols as a sum of single symbols by stuffle.
CoeffExpr linearize(const CoeffExpr& e);

/// The rational r with pi^(2m) = r * Ze^(2m), m >= 1.
Rational pi_power_in_zeta(int m);

/// Checks Se^{w^[p]} Se^w = (p+1) Se^{w^[p+1]} + sum_k Se^{w^[k], 2w, w^[p-k-1]}
/// as an identity of stuffle expansions.
bool newton_relation_check(int omega, int p);

}  // namespace mtk
