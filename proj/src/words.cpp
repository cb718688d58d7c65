#include "mtk/words.hpp"

#include "mtk/rational.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mtk {

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive integers");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Composition::valuation() const {
  return parts_.empty() ? 0 : *std::min_element(parts_.begin(), parts_.end());
}

int Composition::max_part() const {
  return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition Composition::slice(std::size_t from, std::size_t to) const {
  to = std::min(to, parts_.size());
  if (from >= to) return {};
  return Composition(std::vector<int>(parts_.begin() + static_cast<std::ptrdiff_t>(from),
                                      parts_.begin() + static_cast<std::ptrdiff_t>(to)));
}

Composition Composition::concat(const Composition& other) const {
  std::vector<int> v = parts_;
  v.insert(v.end(), other.parts_.begin(), other.parts_.end());
  return Composition(std::move(v));
}

Composition Composition::prepend(int part) const {
  std::vector<int> v;
  v.reserve(parts_.size() + 1);
  v.push_back(part);
  v.insert(v.end(), parts_.begin(), parts_.end());
  return Composition(std::move(v));
}

std::size_t Composition::leading_ones() const {
  std::size_t k = 0;
  while (k < parts_.size() && parts_[k] == 1) ++k;
  return k;
}

bool Composition::all_ones() const { return leading_ones() == parts_.size(); }

std::string Composition::str() const {
  if (parts_.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Composition Composition::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("unbalanced parenthesis in composition");
    s = s.substr(1, s.size() - 2);
  }
  if (s.empty()) return {};
  std::vector<int> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw std::invalid_argument("malformed composition: " + std::string(text));
    }
    parts.push_back(std::stoi(item));
  }
  if (!s.empty() && s.back() == ',') throw std::invalid_argument("malformed composition: " + std::string(text));
  return Composition(std::move(parts));
}

std::strong_ordering Composition::operator<=>(const Composition& other) const {
  if (auto c = weight_ <=> other.weight_; c != 0) return c;
  if (auto c = parts_.size() <=> other.parts_.size(); c != 0) return c;
  return parts_ <=> other.parts_;
}

std::ostream& operator<<(std::ostream& os, const Composition& s) { return os << s.str(); }

Composition repeated(int part, std::size_t times) {
  return Composition(std::vector<int>(times, part));
}

Classification classify(const Composition& s) {
  if (s.empty()) return Classification::Empty;
  const bool left = s.front() >= 2;
  const bool right = s.back() >= 2;
  if (left && right) return Classification::ConvergentMultitangent;
  if (right) return Classification::DivergentLeft;
  if (left) return Classification::DivergentRight;
  return Classification::DivergentBoth;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::ConvergentMultitangent: return "convergent_multitangent";
    case Classification::DivergentLeft: return "divergent_left";
    case Classification::DivergentRight: return "divergent_right";
    case Classification::DivergentBoth: return "divergent_both";
    case Classification::Empty: return "empty";
  }
  return "unknown";
}

WordPoly::WordPoly(const Composition& s, std::int64_t mult) { add(s, mult); }

void WordPoly::add(const Composition& s, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t WordPoly::coefficient(const Composition& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t WordPoly::total_multiplicity() const {
  std::int64_t t = 0;
  for (const auto& [w, m] : terms_) t += m;
  return t;
}

WordPoly& WordPoly::operator+=(const WordPoly& other) {
  for (const auto& [w, m] : other.terms_) add(w, m);
  return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& other) {
  for (const auto& [w, m] : other.terms_) add(w, -m);
  return *this;
}

WordPoly& WordPoly::operator*=(std::int64_t scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, m] : terms_) m *= scalar;
  return *this;
}

std::string WordPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, m] : terms_) {
    if (!first) out += (m < 0 ? " - " : " + ");
    else if (m < 0) out += "-";
    first = false;
    const auto a = m < 0 ? -m : m;
    if (a != 1) out += std::to_string(a) + "*";
    out += "(" + w.str() + ")";
  }
  return out;
}

namespace {

// Stuffle of the suffixes a[i..], b[j..], memoised on (i, j).
class StuffleTable {
 public:
  StuffleTable(std::span<const int> a, std::span<const int> b)
      : a_(a), b_(b), memo_((a.size() + 1) * (b.size() + 1)), done_(memo_.size(), false) {}

  const WordPoly& get(std::size_t i, std::size_t j) {
    const std::size_t key = i * (b_.size() + 1) + j;
    if (done_[key]) return memo_[key];
    WordPoly out;
    if (i == a_.size() || j == b_.size()) {
      std::vector<int> w(a_.begin() + static_cast<std::ptrdiff_t>(i), a_.end());
      w.insert(w.end(), b_.begin() + static_cast<std::ptrdiff_t>(j), b_.end());
      out.add(Composition(std::move(w)), 1);
    } else {
      for (const auto& [w, m] : get(i + 1, j).terms()) out.add(w.prepend(a_[i]), m);
      for (const auto& [w, m] : get(i, j + 1).terms()) out.add(w.prepend(b_[j]), m);
      for (const auto& [w, m] : get(i + 1, j + 1).terms()) out.add(w.prepend(a_[i] + b_[j]), m);
    }
    memo_[key] = std::move(out);
    done_[key] = true;
    return memo_[key];
  }

 private:
  std::span<const int> a_, b_;
  std::vector<WordPoly> memo_;
  std::vector<bool> done_;
};

}  // namespace

WordPoly stuffle(const Composition& a, const Composition& b) {
  StuffleTable table(a.parts(), b.parts());
  return table.get(0, 0);
}

WordPoly stuffle(const WordPoly& a, const WordPoly& b) {
  WordPoly out;
  for (const auto& [u, m] : a.terms()) {
    for (const auto& [v, n] : b.terms()) {
      WordPoly prod = stuffle(u, v);
      prod *= m * n;
      out += prod;
    }
  }
  return out;
}

WordPoly shuffle(const Composition& a, const Composition& b) {
  WordPoly out;
  for (const auto& [w, m] : shuffle_letters<int>(a.parts(), b.parts())) {
    out.add(Composition(w), m);
  }
  return out;
}

std::uint64_t stuffle_count(unsigned la, unsigned lb) {
  std::uint64_t total = 0;
  for (unsigned k = 0; k <= std::min(la, lb); ++k) {
    total += (std::uint64_t{1} << k) * binomial(la, k).get_ui() * binomial(lb, k).get_ui();
  }
  return total;
}

std::vector<Composition> compositions_of_weight(int weight) {
  std::vector<Composition> out;
  if (weight < 0) return out;
  if (weight == 0) {
    out.emplace_back();
    return out;
  }
  // Each composition of p corresponds to a subset of the p-1 cut points.
  const unsigned cuts = static_cast<unsigned>(weight - 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cuts); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (unsigned c = 0; c < cuts; ++c) {
      if (mask & (std::uint64_t{1} << c)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mtk
