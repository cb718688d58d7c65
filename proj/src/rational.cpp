#include "mtk/rational.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mtk {

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

const Rational& bernoulli(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  // Akiyama-Tanigawa gives B_1 = +1/2; the sign of index 1 is fixed below.
  while (table.size() <= n) {
    const unsigned m = static_cast<unsigned>(table.size());
    std::vector<Rational> a(m + 1);
    for (unsigned j = 0; j <= m; ++j) {
      a[j] = Rational(1, j + 1);
      for (unsigned i = j; i >= 1; --i) {
        a[i - 1] = i * (a[i - 1] - a[i]);
      }
    }
    Rational b = a[0];
    b.canonicalize();
    if (m == 1) b = -b;
    table.push_back(b);
  }
  return table[n];
}

long double to_long_double(const Rational& q) {
  mpf_class ratio(0, 192);
  ratio = mpf_class(q.get_num(), 192) / mpf_class(q.get_den(), 192);
  long exp = 0;
  const double hi = mpf_get_d_2exp(&exp, ratio.get_mpf_t());
  mpf_class head(hi, 192);
  if (exp >= 0) {
    mpf_mul_2exp(head.get_mpf_t(), head.get_mpf_t(), static_cast<unsigned long>(exp));
  } else {
    mpf_div_2exp(head.get_mpf_t(), head.get_mpf_t(), static_cast<unsigned long>(-exp));
  }
  mpf_class rest(0, 192);
  rest = ratio - head;
  return std::ldexp(static_cast<long double>(hi), static_cast<int>(exp)) +
         static_cast<long double>(rest.get_d());
}

}  // namespace mtk
