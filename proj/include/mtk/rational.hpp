#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mtk {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);

/// (-1)^e as a small integer.
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Bernoulli number B_n (B_1 = -1/2).
const Rational& bernoulli(unsigned n);

long double to_long_double(const Rational& q);

template <class Real>
Real to_real(const Rational& q) {
  if constexpr (sizeof(Real) > sizeof(double)) {
    return static_cast<Real>(to_long_double(q));
  } else {
    return static_cast<Real>(q.get_d());
  }
}

}  // namespace mtk
