#pragma once

// Compositions (index sequences of iterated sums) and the two products on
// words over the positive integers: the quasi-shuffle (stuffle) and the
// shuffle, both with exact multiplicities.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mtk {

/// A finite sequence of positive integers s = (s_1, ..., s_r).
///
/// Ordered by weight, then length, then lexicographically, so that maps keyed
/// by compositions iterate deterministically.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  [[nodiscard]] std::span<const int> parts() const { return parts_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] int weight() const { return weight_; }
  [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }
  [[nodiscard]] int front() const { return parts_.front(); }
  [[nodiscard]] int back() const { return parts_.back(); }
  /// Smallest part; 0 for the empty composition.
  [[nodiscard]] int valuation() const;
  [[nodiscard]] int max_part() const;

  [[nodiscard]] Composition reversed() const;
  /// Parts [from, to).
  [[nodiscard]] Composition slice(std::size_t from, std::size_t to) const;
  [[nodiscard]] Composition concat(const Composition& other) const;
  [[nodiscard]] Composition prepend(int part) const;

  /// Number of leading parts equal to 1.
  [[nodiscard]] std::size_t leading_ones() const;
  [[nodiscard]] bool all_ones() const;

  /// "2,1,3"; the empty composition prints as "()".
  [[nodiscard]] std::string str() const;
  /// Accepts "2,1,3", "(2,1,3)", "()" and surrounding whitespace.
  static Composition parse(std::string_view text);

  bool operator==(const Composition& other) const { return parts_ == other.parts_; }
  std::strong_ordering operator<=>(const Composition& other) const;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Composition& s);

/// n^[k]: the part n repeated k times.
Composition repeated(int part, std::size_t times);

enum class Classification {
  ConvergentMultitangent,  // s_1 >= 2 and s_r >= 2
  DivergentLeft,           // s_1 = 1, s_r >= 2
  DivergentRight,          // s_1 >= 2, s_r = 1
  DivergentBoth,           // s_1 = s_r = 1
  Empty,
};

Classification classify(const Composition& s);
std::string_view to_string(Classification c);

/// s in S*_b: first part at least 2 (or empty), so Ze^s converges.
inline bool is_mzv_convergent(const Composition& s) { return s.empty() || s.front() >= 2; }
/// s in S*_e: last part at least 2 (or empty).
inline bool is_end_convergent(const Composition& s) { return s.empty() || s.back() >= 2; }
/// s in S*_{b,e}, non-empty.
inline bool is_multitangent_convergent(const Composition& s) {
  return classify(s) == Classification::ConvergentMultitangent;
}
/// s in seq(N_2) minus the empty word: every part at least 2.
inline bool is_unit_free(const Composition& s) { return !s.empty() && s.valuation() >= 2; }

/// Formal Z-linear combination of compositions; zero entries are never stored.
class WordPoly {
 public:
  using Map = std::map<Composition, std::int64_t>;

  WordPoly() = default;
  explicit WordPoly(const Composition& s, std::int64_t mult = 1);

  void add(const Composition& s, std::int64_t mult);
  [[nodiscard]] std::int64_t coefficient(const Composition& s) const;
  [[nodiscard]] const Map& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  /// Sum of all multiplicities.
  [[nodiscard]] std::int64_t total_multiplicity() const;

  WordPoly& operator+=(const WordPoly& other);
  WordPoly& operator-=(const WordPoly& other);
  WordPoly& operator*=(std::int64_t scalar);
  friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
  friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
  friend WordPoly operator*(std::int64_t k, WordPoly a) { return a *= k; }
  bool operator==(const WordPoly& other) const = default;

  [[nodiscard]] std::string str() const;

 private:
  Map terms_;
};

/// Quasi-shuffle: contractions add parts.
WordPoly stuffle(const Composition& a, const Composition& b);
/// Stuffle extended bilinearly.
WordPoly stuffle(const WordPoly& a, const WordPoly& b);
/// Shuffle of the parts viewed as letters.
WordPoly shuffle(const Composition& a, const Composition& b);

/// Shuffle of two words over an arbitrary letter type, as a multiset.
template <class Letter>
std::map<std::vector<Letter>, std::int64_t> shuffle_letters(std::span<const Letter> a,
                                                            std::span<const Letter> b) {
  std::map<std::vector<Letter>, std::int64_t> out;
  if (a.empty() || b.empty()) {
    std::vector<Letter> w(a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    out[w] += 1;
    return out;
  }
  for (const auto& [tail, m] : shuffle_letters(a.subspan(1), b)) {
    std::vector<Letter> w{a.front()};
    w.insert(w.end(), tail.begin(), tail.end());
    out[w] += m;
  }
  for (const auto& [tail, m] : shuffle_letters(a, b.subspan(1))) {
    std::vector<Letter> w{b.front()};
    w.insert(w.end(), tail.begin(), tail.end());
    out[w] += m;
  }
  return out;
}

/// Number of distinct words in the quasi-shuffle of two words of lengths la
/// and lb over pairwise distinct letters: sum_k 2^k C(la, k) C(lb, k).
std::uint64_t stuffle_count(unsigned la, unsigned lb);

/// Compositions of the given weight, in the Composition order.
std::vector<Composition> compositions_of_weight(int weight);

}  // namespace mtk
