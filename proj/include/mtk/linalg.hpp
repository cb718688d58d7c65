#pragma once

// Exact linear algebra over Q with fraction-free (Bareiss) elimination.

#include <optional>
#include <string>
#include <vector>

#include "mtk/rational.hpp"

namespace mtk {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  [[nodiscard]] std::vector<Rational> column(std::size_t j) const;
  [[nodiscard]] std::vector<Rational> row(std::size_t i) const;
  [[nodiscard]] std::vector<Rational> apply(const std::vector<Rational>& x) const;
  [[nodiscard]] std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form with leftmost pivots.
struct EchelonForm {
  RationalMatrix rref;            // first rank() rows are nonzero
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Rows are scaled to integers and reduced by Bareiss elimination; the
/// integer echelon form is then normalized by exact back-substitution.
EchelonForm echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column (that entry is 1).
std::vector<std::vector<Rational>> kernel(const RationalMatrix& m);

/// A solution of m x = b with every free variable set to 0, if any.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

/// Is v in the column span of the given vectors?
bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v);

}  // namespace mtk
