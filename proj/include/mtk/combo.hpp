#pragma once

// Rational combinations of multitangent symbols Te^s.

#include <map>
#include <optional>
#include <string>

#include "mtk/rational.hpp"
#include "mtk/words.hpp"

namespace mtk {

class MtCombo {
 public:
  using Map = std::map<Composition, Rational>;

  MtCombo() = default;
  MtCombo(const Composition& s, const Rational& c) { add(s, c); }

  [[nodiscard]] const Map& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Rational coefficient(const Composition& s) const;
  /// Common weight of all terms; nullopt for mixed weights or zero.
  [[nodiscard]] std::optional<int> weight() const;

  void add(const Composition& s, const Rational& c);
  MtCombo& operator+=(const MtCombo& o);
  MtCombo& operator-=(const MtCombo& o);
  MtCombo& operator*=(const Rational& c);
  friend MtCombo operator+(MtCombo a, const MtCombo& b) { return a += b; }
  friend MtCombo operator-(MtCombo a, const MtCombo& b) { return a -= b; }
  friend MtCombo operator*(const Rational& c, MtCombo a) { return a *= c; }
  bool operator==(const MtCombo& o) const = default;

  /// "1/6·Te[3,2] - 1/6·Te[2,3]"; "0" when empty.
  [[nodiscard]] std::string str() const;

 private:
  Map terms_;
};

}  // namespace mtk
