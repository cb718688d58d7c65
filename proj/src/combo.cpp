#include "mtk/combo.hpp"

#include <vector>

namespace mtk {

Rational MtCombo::coefficient(const Composition& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> MtCombo::weight() const {
  if (terms_.empty()) return std::nullopt;
  const int w = terms_.begin()->first.weight();
  for (const auto& [s, c] : terms_) {
    if (s.weight() != w) return std::nullopt;
  }
  return w;
}

void MtCombo::add(const Composition& s, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MtCombo& MtCombo::operator+=(const MtCombo& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

MtCombo& MtCombo::operator-=(const MtCombo& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

MtCombo& MtCombo::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

std::string MtCombo::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    std::string t = "Te[" + s.str() + "]";
    if (a != 1) t = to_string(a) + "·" + t;
    if (first) {
      out = neg ? "-" + t : t;
    } else {
      out += neg ? " - " + t : " + " + t;
    }
    first = false;
  }
  return out;
}

}  // namespace mtk
