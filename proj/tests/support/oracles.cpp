#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

double multiple_polylog(const std::vector<int>& s, double y, int terms) {
  if (s.empty()) return 1.0;
  const std::size_t k = s.size();
  // inner[n] = sum over n > n_{j+1} > ... of the inner factors
  std::vector<double> inner(static_cast<std::size_t>(terms) + 2, 1.0);
  for (std::size_t j = k; j-- > 1;) {
    std::vector<double> next(inner.size(), 0.0);
    double acc = 0;
    for (int n = 1; n <= terms; ++n) {
      next[static_cast<std::size_t>(n)] = acc;
      acc += inner[static_cast<std::size_t>(n)] / std::pow(static_cast<double>(n), s[j]);
    }
    next[static_cast<std::size_t>(terms) + 1] = acc;
    inner = next;
  }
  double total = 0;
  double yn = 1;
  for (int n = 1; n <= terms; ++n) {
    yn *= y;
    total += yn * inner[static_cast<std::size_t>(n)] / std::pow(static_cast<double>(n), s[0]);
  }
  return total;
}

namespace {

std::vector<int> letters(const std::vector<int>& s) {
  std::vector<int> w;
  for (int p : s) {
    for (int j = 1; j < p; ++j) w.push_back(0);
    w.push_back(1);
  }
  return w;
}

std::vector<int> parts(const std::vector<int>& w) {
  std::vector<int> s;
  int run = 0;
  for (int l : w) {
    ++run;
    if (l == 1) {
      s.push_back(run);
      run = 0;
    }
  }
  if (run != 0) throw std::logic_error("word must end in x1");
  return s;
}

}  // namespace

double mzv_hoelder(const std::vector<int>& s) {
  const std::vector<int> w = letters(s);
  double total = 0;
  for (std::size_t j = 0; j <= w.size(); ++j) {
    std::vector<int> dual;
    for (std::size_t i = j; i-- > 0;) dual.push_back(1 - w[i]);
    const std::vector<int> tail(w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
    total += multiple_polylog(parts(dual), 0.5) * multiple_polylog(parts(tail), 0.5);
  }
  return total;
}

std::map<std::vector<int>, long> stuffle_naive(const std::vector<int>& a, const std::vector<int>& b) {
  std::map<std::vector<int>, long> out;
  if (a.empty() || b.empty()) {
    out[a.empty() ? b : a] += 1;
    return out;
  }
  const std::vector<int> a0(a.begin(), a.end() - 1);
  const std::vector<int> b0(b.begin(), b.end() - 1);
  auto append = [&](const std::map<std::vector<int>, long>& m, int last) {
    for (const auto& [w, c] : m) {
      auto v = w;
      v.push_back(last);
      out[v] += c;
    }
  };
  append(stuffle_naive(a0, b), a.back());
  append(stuffle_naive(a, b0), b.back());
  append(stuffle_naive(a0, b0), a.back() + b.back());
  return out;
}

std::vector<std::vector<mtk::Rational>> rref_naive(std::vector<std::vector<mtk::Rational>> m,
                                                   std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  if (m.empty()) return m;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const mtk::Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mtk::Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

}  // namespace oracle
