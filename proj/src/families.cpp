#include "mtk/families.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mtk/errors.hpp"
#include "mtk/mzv_numeric.hpp"
#include "mtk/numerics.hpp"

namespace mtk {

EpsilonWord::EpsilonWord(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("EpsilonWord needs n >= 1");
  for (int e : entries_) {
    if (e != 1 && e != -1) throw std::invalid_argument("EpsilonWord entries must be +1 or -1");
  }
}

EpsilonWord EpsilonWord::from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<int> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = (mask >> k & 1U) ? -1 : 1;
  return EpsilonWord(std::move(v));
}

int EpsilonWord::sg() const {
  int p = 1;
  for (int e : entries_) p *= e;
  return p;
}

int EpsilonWord::s() const {
  int t = 0;
  for (int e : entries_) t += e;
  return t;
}

std::complex<long double> EpsilonWord::e() const {
  const long double n = static_cast<long double>(entries_.size());
  std::complex<long double> acc(0);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const long double angle = (2.0L * static_cast<long double>(k) + 1) * std::numbers::pi_v<long double> / n;
    acc += static_cast<long double>(entries_[k]) * std::polar(1.0L, angle);
  }
  return acc;
}

OnesClosedForm te_ones_closed_form(int r) {
  if (r < 0) throw std::invalid_argument("te_ones_closed_form: r must be >= 0");
  OnesClosedForm f;
  const int p = r / 2;
  if (r % 2 == 0) {
    f.constant = PiRational::pi_power(2 * p, Rational(sign_pow(p)) / Rational(factorial(static_cast<unsigned>(2 * p))));
  } else {
    f.te1_coeff =
        PiRational::pi_power(2 * p, Rational(sign_pow(p)) / Rational(factorial(static_cast<unsigned>(2 * p + 1))));
  }
  return f;
}

ComplexEstimate te_nk_closed_form(int n, int k, std::complex<double> z0, const NumericContext& ctx) {
  if (n < 1 || k < 0) throw std::invalid_argument("te_nk_closed_form: need n >= 1, k >= 0");
  if (n > 30) throw std::invalid_argument("te_nk_closed_form: n too large");
  check_pole_guard(z0, ctx);
  using LD = long double;
  using C = std::complex<LD>;
  const int kn = k * n;
  const auto un = static_cast<std::size_t>(n);
  std::vector<C> omega(un);
  for (std::size_t j = 0; j < un; ++j) {
    omega[j] = std::polar(1.0L, (2.0L * static_cast<LD>(j) + 1) * std::numbers::pi_v<LD> / static_cast<LD>(n));
  }
  // Gray-code walk over sign vectors; c_m accumulates sg (e)^{kn} for s = m.
  std::map<int, C> grouped;
  std::map<int, LD> grouped_abs;
  std::vector<int> eps(un, 1);
  C e(0);
  for (const auto& w : omega) e += w;
  int s = n;
  int sg = 1;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t g = 0; g < total; ++g) {
    if (g > 0) {
      const auto j = static_cast<std::size_t>(__builtin_ctzll(g));
      e -= LD(2 * eps[j]) * omega[j];
      s -= 2 * eps[j];
      eps[j] = -eps[j];
      sg = -sg;
    }
    const C ek = kn == 0 ? C(1) : std::pow(e, kn);
    grouped[s] += LD(sg) * ek;
    grouped_abs[s] += std::abs(ek);
  }
  const LD eps_ld = std::numeric_limits<LD>::epsilon();
  const C z(static_cast<LD>(z0.real()), static_cast<LD>(z0.imag()));
  const LD pi = std::numbers::pi_v<LD>;
  const LD phase = static_cast<LD>(n - 1) * pi / 2;
  C sum(0);
  LD mag = 0;
  for (const auto& [m, c] : grouped) {
    const LD tol = 64 * eps_ld * static_cast<LD>(n + kn + 1) * (grouped_abs[m] + 1);
    if (std::abs(c.imag()) > tol) {
      std::ostringstream msg;
      msg << "sign sum for Te[" << n << "^" << k << "] has imaginary part " << static_cast<double>(c.imag());
      throw IntegrityError(msg.str());
    }
    const C x = static_cast<LD>(m) * pi * z + phase;
    const C t = (kn % 2 != 0) ? std::cos(x) : std::sin(x);
    sum += c.real() * t;
    mag += (std::abs(c.real()) + tol) * std::abs(t);
  }
  const int sign = sign_pow(n - 1 + (kn + 1) / 2);
  const LD pref = static_cast<LD>(sign) * std::pow(pi, static_cast<LD>(kn)) /
                  to_long_double(Rational(factorial(static_cast<unsigned>(kn))));
  const C denom = std::pow(LD(2) * std::sin(pi * z), n);
  const C v = pref * sum / denom;
  const double err = static_cast<double>(std::abs(pref / denom) * mag * eps_ld * 64) + std::abs(v) * 1.2e-16;
  return {std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag())), err};
}

PiRational zagier_ze2n(int n) {
  if (n < 1) throw std::invalid_argument("zagier_ze2n: n must be >= 1");
  return PiRational::pi_power(2 * n, Rational(1) / Rational(factorial(static_cast<unsigned>(2 * n + 1))));
}

bool sin_product_series_check(int order, const NumericContext& ctx, double* max_rel_dev) {
  if (max_rel_dev) *max_rel_dev = 0;
  if (order <= 0) return true;
  // g = exp(f), f = sum a_m Y^m with a_m = -Ze^(2m)/m, Y = X^2:  m g_m = sum_j j a_j g_{m-j}.
  auto target = [](int m) {
    return PiRational::pi_power(2 * m, Rational(sign_pow(m)) / Rational(factorial(static_cast<unsigned>(2 * m + 1))));
  };
  if (order <= 3) {
    std::vector<PiRational> a(static_cast<std::size_t>(order) + 1), g(static_cast<std::size_t>(order) + 1);
    for (int m = 1; m <= order; ++m) {
      // Ze^(2m) = pi^(2m) / pi_power_in_zeta(m)
      a[static_cast<std::size_t>(m)] = PiRational::pi_power(2 * m, Rational(-1) / (pi_power_in_zeta(m) * m));
    }
    g[0] = PiRational(1);
    for (int m = 1; m <= order; ++m) {
      PiRational acc;
      for (int j = 1; j <= m; ++j) {
        PiRational t = a[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(m - j)];
        t *= Rational(j);
        acc += t;
      }
      acc *= Rational(1, m);
      g[static_cast<std::size_t>(m)] = acc;
      if (!(acc == target(m))) return false;
    }
    return true;
  }
  std::vector<long double> a(static_cast<std::size_t>(order) + 1), g(static_cast<std::size_t>(order) + 1);
  for (int m = 1; m <= order; ++m) {
    a[static_cast<std::size_t>(m)] = -ze_numeric(Composition{2 * m}, ctx).value / m;
  }
  g[0] = 1;
  double worst = 0;
  for (int m = 1; m <= order; ++m) {
    long double acc = 0;
    for (int j = 1; j <= m; ++j) acc += j * a[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(m - j)];
    g[static_cast<std::size_t>(m)] = acc / m;
    const long double t = target(m).value();
    worst = std::max(worst, static_cast<double>(std::abs(g[static_cast<std::size_t>(m)] - t) / std::abs(t)));
  }
  if (max_rel_dev) *max_rel_dev = worst;
  return worst <= std::max(1e-9, 1e3 * ctx.target_abs_error);
}

}  // namespace mtk
