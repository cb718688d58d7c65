#include "mtk/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace mtk {

std::vector<Rational> RationalMatrix::column(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != 0 && x[j] != 0) y[i] += (*this)(i, j) * x[j];
    }
  }
  return y;
}

std::string RationalMatrix::str() const {
  std::ostringstream o;
  for (std::size_t i = 0; i < rows_; ++i) {
    o << "[";
    for (std::size_t j = 0; j < cols_; ++j) o << (j ? " " : "") << (*this)(i, j).get_str();
    o << "]\n";
  }
  return o.str();
}

EchelonForm echelon(const RationalMatrix& m) {
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  // Integer rows: multiply each row by the lcm of its denominators.
  std::vector<std::vector<BigInt>> a(R, std::vector<BigInt>(C));
  for (std::size_t i = 0; i < R; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  std::vector<std::size_t> pivots;
  BigInt prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t p = row;
    while (p < R && a[p][col] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = row + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j) {
        a[i][j] = (a[i][j] * a[row][col] - a[i][col] * a[row][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    pivots.push_back(col);
    ++row;
  }
  EchelonForm out;
  out.pivots = pivots;
  out.rref = RationalMatrix(R, C);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Rational piv(a[i][pivots[i]]);
    for (std::size_t j = 0; j < C; ++j) {
      if (a[i][j] != 0) out.rref(i, j) = Rational(a[i][j]) / piv;
    }
  }
  // Back-substitution to clear entries above each pivot.
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t pc = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      const Rational f = out.rref(k, pc);
      if (f == 0) continue;
      for (std::size_t j = pc; j < C; ++j) {
        if (out.rref(i, j) != 0) out.rref(k, j) -= f * out.rref(i, j);
      }
    }
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return echelon(m).rank(); }

std::vector<std::vector<Rational>> kernel(const RationalMatrix& m) {
  const auto e = echelon(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(C);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t C = m.cols();
  RationalMatrix aug(m.rows(), C + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < C; ++j) aug(i, j) = m(i, j);
    aug(i, C) = b[i];
  }
  const auto e = echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == C) return std::nullopt;
  std::vector<Rational> x(C);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rref(i, C);
  return x;
}

bool in_span(const std::vector<std::vector<Rational>>& basis, const std::vector<Rational>& v) {
  if (basis.empty()) {
    for (const auto& c : v) {
      if (c != 0) return false;
    }
    return true;
  }
  RationalMatrix m(v.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (basis[j].size() != v.size()) throw std::invalid_argument("in_span: dimension mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = basis[j][i];
  }
  return solve(m, v).has_value();
}

}  // namespace mtk
