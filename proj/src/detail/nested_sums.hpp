#pragma once

// Truncated nested sums with asymptotic tails.
//
// For t = (t_1..t_a) with t_1 >= 2 the one-sided tail
//   A_t(w) = sum_{m_1 > ... > m_a > 0} prod (m_i + w)^(-t_i)
// has an asymptotic expansion in 1/w obtained by iterating the
// Euler-Maclaurin series of the Hurwitz zeta function
//   zeta_H(sigma, w+1) ~ w^(1-sigma)/(sigma-1) - w^(-sigma)/2
//                        + sum_p B_2p/(2p)! (sigma)_(2p-1) w^(-sigma-2p+1).
// The coefficients are rational and cached per composition.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <type_traits>
#include <vector>

#include "mtk/errors.hpp"
#include "mtk/numeric_context.hpp"
#include "mtk/rational.hpp"
#include "mtk/words.hpp"

namespace mtk::detail {

/// Extra orders beyond the weight kept in every tail series.
inline constexpr int kTailOrder = 30;

/// Coefficients c_j of A_t(w) ~ sum_j c_j w^(-j), j = 0..weight(t)+kTailOrder.
const std::vector<Rational>& tail_series_exact(const Composition& t);
/// Same coefficients rounded to long double.
const std::vector<long double>& tail_series(const Composition& t);

template <class T>
struct real_of {
  using type = T;
};
template <class T>
struct real_of<std::complex<T>> {
  using type = T;
};
template <class T>
using real_of_t = typename real_of<T>::type;

template <class Scalar>
struct TailValue {
  Scalar value{};
  double err = 0.0;  // size of the two last retained orders
};

/// Evaluates the tail series of t at w (|w| large, Re w > 0).
template <class Scalar>
TailValue<Scalar> eval_tail(const Composition& t, Scalar w) {
  using Real = real_of_t<Scalar>;
  if (t.empty()) return {Scalar(1), 0.0};
  const auto& c = tail_series(t);
  const Scalar inv = Scalar(1) / w;
  Scalar acc(0);
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * inv + Scalar(static_cast<Real>(c[j]));
  const std::size_t last = c.size() - 1;
  const double aw = static_cast<double>(std::abs(w));
  const double e1 = std::abs(static_cast<double>(c[last])) * std::pow(aw, -static_cast<double>(last));
  const double e0 = std::abs(static_cast<double>(c[last - 1])) *
                    std::pow(aw, -static_cast<double>(last - 1));
  return {acc, 2.0 * (e0 + e1)};
}

template <class Scalar>
Scalar ipow(Scalar x, int k) {
  Scalar r(1);
  while (k > 0) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

template <class Real>
double unit_roundoff() {
  return static_cast<double>(std::numeric_limits<Real>::epsilon());
}

/// Neumaier-style compensated accumulator.
template <class Scalar>
struct Compensated {
  Scalar sum{};
  Scalar comp{};
  void add(Scalar x) {
    Scalar t = sum + x;
    if constexpr (std::is_floating_point_v<Scalar>) {
      if (std::abs(sum) >= std::abs(x)) comp += (sum - t) + x;
      else comp += (x - t) + sum;
    } else {
      using Real = real_of_t<Scalar>;
      auto two_sum = [](Real a, Real b, Real s) {
        return std::abs(a) >= std::abs(b) ? (a - s) + b : (b - s) + a;
      };
      comp += Scalar(two_sum(sum.real(), x.real(), t.real()), two_sum(sum.imag(), x.imag(), t.imag()));
    }
    sum = t;
  }
  [[nodiscard]] Scalar value() const { return sum + comp; }
};

/// Head sums over N >= n_k > ... > n_r > 0 of prod (n_i + z)^(-s_i) for
/// every suffix k = 0..r (index r is the empty suffix, value 1); also
/// returns the same sums taken with absolute values, for rounding estimates.
template <class Scalar>
void head_sums(const Composition& s, Scalar z, std::int64_t N, std::vector<Scalar>& value,
               std::vector<double>& absval) {
  using Real = real_of_t<Scalar>;
  const std::size_t r = s.length();
  std::vector<Compensated<Scalar>> P(r + 1);
  std::vector<double> A(r + 1, 0.0);
  P[r].sum = Scalar(1);
  A[r] = 1.0;
  const int maxp = s.max_part();
  std::vector<Scalar> pw(static_cast<std::size_t>(maxp) + 1);
  for (std::int64_t n = 1; n <= N; ++n) {
    const Scalar x = Scalar(1) / (Scalar(static_cast<Real>(n)) + z);
    pw[0] = Scalar(1);
    for (int p = 1; p <= maxp; ++p) pw[static_cast<std::size_t>(p)] = pw[static_cast<std::size_t>(p) - 1] * x;
    // Ascending k: P[k] must see P[k+1] before index n is admitted there.
    for (std::size_t k = 0; k < r; ++k) {
      const Scalar term = pw[static_cast<std::size_t>(s[k])] * P[k + 1].value();
      P[k].add(term);
      A[k] += static_cast<double>(std::abs(pw[static_cast<std::size_t>(s[k])])) * A[k + 1];
    }
  }
  value.resize(r + 1);
  absval = A;
  for (std::size_t k = 0; k <= r; ++k) value[k] = P[k].value();
}

/// sum_{n_1 > ... > n_r > 0} prod (n_i + z)^(-s_i) for s_1 >= 2, with head
/// length N; returns value and an error estimate.
template <class Scalar>
TailValue<Scalar> hurwitz_plus_fixed(const Composition& s, Scalar z, std::int64_t N) {
  using Real = real_of_t<Scalar>;
  std::vector<Scalar> head;
  std::vector<double> head_abs;
  head_sums(s, z, N, head, head_abs);
  const std::size_t r = s.length();
  const Scalar w = Scalar(static_cast<Real>(N)) + z;
  Compensated<Scalar> acc;
  double err = 0.0;
  double mag = 0.0;
  for (std::size_t a = 0; a <= r; ++a) {
    const auto tail = eval_tail(s.slice(0, a), w);
    acc.add(tail.value * head[a]);
    err += tail.err * head_abs[a];
    mag += static_cast<double>(std::abs(tail.value)) * head_abs[a];
  }
  err += 8.0 * static_cast<double>(r + 1) * unit_roundoff<Real>() * mag;
  return {acc.value(), err};
}

/// Doubles the head length from N0 until the estimate is below target/4.
template <class Scalar>
TailValue<Scalar> hurwitz_plus(const Composition& s, Scalar z, const NumericContext& ctx,
                               std::int64_t N0) {
  std::int64_t N = N0;
  TailValue<Scalar> best{};
  while (true) {
    auto v = hurwitz_plus_fixed(s, z, N);
    best = v;
    if (v.err <= ctx.target_abs_error / 4) return v;
    if (2 * N > ctx.truncation_cap) break;
    N *= 2;
  }
  if (best.err <= ctx.target_abs_error) return best;
  throw PrecisionUnreachable("nested sum for " + s.str() + " exceeded truncation cap", best.err);
}

}  // namespace mtk::detail
