#include "mtk/numerics.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "detail/nested_sums.hpp"
#include "mtk/errors.hpp"
#include "mtk/mzv_numeric.hpp"

namespace mtk {

namespace {

template <class Real>
constexpr Real kPi = std::numbers::pi_v<Real>;

std::string point_str(Complex z) {
  std::ostringstream o;
  o.precision(17);
  o << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return o.str();
}

}  // namespace

void check_pole_guard(Complex z, const NumericContext& ctx) {
  const double d = std::abs(z - std::round(z.real()));
  if (!(d > ctx.pole_guard)) {
    throw PoleProximityError("z = " + point_str(z) + " is within the guard band of an integer");
  }
}

// ------------------------------------------------------------------ CotPoly

CotPoly::CotPoly(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

CotPoly CotPoly::next() const {
  // (1/k)(1 + c^2) P'(c)
  std::vector<Rational> d;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) d.push_back(Rational(static_cast<long>(j)) * coeffs_[j]);
  std::vector<Rational> out(d.size() + 2);
  for (std::size_t j = 0; j < d.size(); ++j) {
    out[j] += d[j];
    out[j + 2] += d[j];
  }
  for (auto& c : out) c /= Rational(order_);
  return CotPoly(order_ + 1, std::move(out));
}

const CotPoly& CotPoly::monotangent(int k) {
  if (k < 1) throw std::invalid_argument("monotangent order must be >= 1");
  static std::mutex mutex;
  static std::deque<CotPoly> table;
  std::lock_guard lock(mutex);
  if (table.empty()) table.push_back(CotPoly(1, {Rational(0), Rational(1)}));
  while (static_cast<int>(table.size()) < k) table.push_back(table.back().next());
  return table[static_cast<std::size_t>(k) - 1];
}

const std::vector<GaussRational>& CotPoly::shifted(bool upper) const {
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& cache = upper ? upper_ : lower_;
  if (!cache.empty()) return cache;
  // c0^e for c0 = -i (upper) or +i, e = 0..deg.
  const std::size_t n = coeffs_.size();
  std::vector<GaussRational> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (coeffs_[j] == 0) continue;
    for (std::size_t m = 0; m <= j; ++m) {
      const std::size_t e = j - m;
      const Rational c = coeffs_[j] * Rational(binomial(static_cast<long>(j), static_cast<long>(m)));
      // i^e cycles 1, i, -1, -i; (-i)^e = conj.
      const int phase = static_cast<int>(e % 4);
      const int sgn_im = upper ? -1 : 1;
      switch (phase) {
        case 0: out[m].re += c; break;
        case 1: out[m].im += sgn_im * c; break;
        case 2: out[m].re -= c; break;
        case 3: out[m].im -= sgn_im * c; break;
      }
    }
  }
  cache = std::move(out);
  return cache;
}

namespace {

template <class Real>
Estimate<std::complex<Real>> monotangent_impl(int k, Complex z0) {
  using C = std::complex<Real>;
  const CotPoly& p = CotPoly::monotangent(k);
  // Periodicity: shift the real part into [-1/2, 1/2].
  const C z(static_cast<Real>(z0.real() - std::round(z0.real())), static_cast<Real>(z0.imag()));
  const bool upper = z.imag() >= 0;
  const C I(0, 1);
  C d;
  if (upper) {
    const C q = std::exp(C(0, 2) * kPi<Real> * z);
    d = Real(-2) * I * q / (Real(1) - q);
  } else {
    const C q = std::exp(C(0, -2) * kPi<Real> * z);
    d = Real(2) * I * q / (Real(1) - q);
  }
  const auto& b = p.shifted(upper);
  C acc(0);
  Real mag = 0;
  const Real ad = std::abs(d);
  for (std::size_t m = b.size(); m-- > 0;) {
    const C bm(to_real<Real>(b[m].re), to_real<Real>(b[m].im));
    acc = acc * d + bm;
    mag = mag * ad + std::abs(bm);
  }
  const Real scale = std::pow(kPi<Real>, static_cast<Real>(k));
  const double eps = detail::unit_roundoff<Real>();
  const double err = static_cast<double>(scale * mag) * eps * (4.0 * (b.size() + 2) + 8.0 * std::abs(z0) + 8.0);
  return {acc * scale, err};
}

template <class Real>
ComplexEstimate to_double(const Estimate<std::complex<Real>>& e) {
  const Complex v(static_cast<double>(e.value.real()), static_cast<double>(e.value.imag()));
  return {v, e.abs_err + std::abs(v) * 1.2e-16};
}

}  // namespace

ComplexEstimate monotangent_eval(int k, Complex z, const NumericContext& ctx) {
  ctx.validate();
  check_pole_guard(z, ctx);
  if (ctx.extended()) return to_double(monotangent_impl<long double>(k, z));
  return to_double(monotangent_impl<double>(k, z));
}

// -------------------------------------------------------- direct evaluation

namespace {

// For fixed last position e, chain sums over positions j..e (j = 0..e) of
// sum_{hi >= n_j > ... > n_e >= lo} prod (n + z)^(-s); index e+1 is 1.
template <class Scalar>
void window_chains(const Composition& s, std::size_t e, Scalar z, std::int64_t lo, std::int64_t hi,
                   std::vector<Scalar>& value, std::vector<double>& absval) {
  using Real = detail::real_of_t<Scalar>;
  std::vector<detail::Compensated<Scalar>> Q(e + 2);
  std::vector<double> A(e + 2, 0.0);
  Q[e + 1].sum = Scalar(1);
  A[e + 1] = 1.0;
  const int maxp = s.max_part();
  std::vector<Scalar> pw(static_cast<std::size_t>(maxp) + 1);
  for (std::int64_t n = lo; n <= hi; ++n) {
    const Scalar x = Scalar(1) / (Scalar(static_cast<Real>(n)) + z);
    pw[0] = Scalar(1);
    for (int p = 1; p <= maxp; ++p) pw[static_cast<std::size_t>(p)] = pw[static_cast<std::size_t>(p) - 1] * x;
    for (std::size_t j = 0; j <= e; ++j) {
      const auto& xp = pw[static_cast<std::size_t>(s[j])];
      Q[j].add(xp * Q[j + 1].value());
      A[j] += static_cast<double>(std::abs(xp)) * A[j + 1];
    }
  }
  value.resize(e + 2);
  absval = A;
  for (std::size_t j = 0; j <= e + 1; ++j) value[j] = Q[j].value();
}

template <class Real>
Estimate<std::complex<Real>> direct_fixed(const Composition& s, Complex z0, std::int64_t N) {
  using C = std::complex<Real>;
  const C z(static_cast<Real>(z0.real()), static_cast<Real>(z0.imag()));
  const std::size_t r = s.length();
  const C wu = C(static_cast<Real>(N)) + z;
  const C wl = C(static_cast<Real>(N)) - z;
  // Upper tails U[a] for prefixes s_1..s_a; lower tails L[b] for suffixes s_b..s_r (0-based b).
  std::vector<detail::TailValue<C>> U(r + 1), L(r + 1);
  for (std::size_t a = 0; a <= r; ++a) U[a] = detail::eval_tail(s.slice(0, a), wu);
  for (std::size_t b = 0; b <= r; ++b) {
    const Composition suffix = s.slice(b, r);
    auto t = detail::eval_tail(suffix.reversed(), wl);
    if (suffix.weight() % 2 != 0) t.value = -t.value;
    L[b] = t;
  }
  detail::Compensated<C> acc;
  double err = 0.0;
  double mag = 0.0;
  std::vector<C> W;
  std::vector<double> Wabs;
  // Window covers positions a..b-1 (0-based), a <= b.
  for (std::size_t b = 0; b <= r; ++b) {
    if (b > 0) window_chains(s, b - 1, z, -N, N, W, Wabs);
    for (std::size_t a = 0; a <= b; ++a) {
      const C w = (b == 0 || a == b) ? C(1) : W[a];
      const double wa = (b == 0 || a == b) ? 1.0 : Wabs[a];
      const C term = U[a].value * w * L[b].value;
      acc.add(term);
      const double au = static_cast<double>(std::abs(U[a].value));
      const double al = static_cast<double>(std::abs(L[b].value));
      err += U[a].err * wa * (al + L[b].err) + au * wa * L[b].err;
      mag += au * wa * al;
    }
  }
  err += 8.0 * static_cast<double>(r + 2) * detail::unit_roundoff<Real>() * mag;
  return {acc.value(), err};
}

}  // namespace

ComplexEstimate multitangent_eval_direct(const Composition& s, Complex z, const NumericContext& ctx) {
  ctx.validate();
  if (!is_multitangent_convergent(s)) {
    throw std::invalid_argument("direct evaluation needs s_1, s_r >= 2: " + s.str());
  }
  check_pole_guard(z, ctx);
  std::int64_t N = std::max<std::int64_t>(30, static_cast<std::int64_t>(std::ceil(std::abs(z))) + 30);
  ComplexEstimate best{};
  while (true) {
    best = ctx.extended() ? to_double(direct_fixed<long double>(s, z, N)) : to_double(direct_fixed<double>(s, z, N));
    if (best.abs_err <= ctx.target_abs_error / 4) return best;
    if (2 * N > ctx.truncation_cap) break;
    N *= 2;
  }
  if (best.abs_err <= ctx.target_abs_error) return best;
  throw PrecisionUnreachable("direct sum for Te[" + s.str() + "] exceeded truncation cap", best.abs_err);
}

// ------------------------------------------------------- reduced evaluation

ComplexEstimate evaluate_reduction(const ReductionResult& r, Complex z, const NumericContext& ctx) {
  ctx.validate();
  check_pole_guard(z, ctx);
  Complex total(static_cast<double>(r.constant.value()), 0.0);
  double err = total == Complex(0) ? 0.0 : std::abs(total) * 2e-16;
  const NumericContext cctx = ctx.with_target(ctx.target_abs_error / 8);
  for (const auto& [k, e] : r.coeffs) {
    const auto c = mzv_numeric(e, cctx);
    const auto m = monotangent_eval(k, z, ctx);
    total += c.value * m.value;
    err += std::abs(c.value) * m.abs_err + c.abs_err * std::abs(m.value);
  }
  return {total, err};
}

ComplexEstimate multitangent_eval_reduced(const Composition& s, Complex z, const NumericContext& ctx) {
  return evaluate_reduction(reduce_clean(s, ctx), z, ctx);
}

// ------------------------------------------------------------------ Hurwitz

namespace {

// psi(x) ~ log x - 1/(2x) - sum_p B_2p / (2p x^2p)
template <class C>
detail::TailValue<C> digamma_asymptotic(C x) {
  using Real = detail::real_of_t<C>;
  C acc = std::log(x) - Real(0.5) / x;
  const C inv2 = Real(1) / (x * x);
  C pw = inv2;
  double last = 0;
  for (unsigned p = 1; p <= 12; ++p) {
    const C term = to_real<Real>(bernoulli(2 * p)) / Real(2 * p) * pw;
    acc -= term;
    last = static_cast<double>(std::abs(term));
    pw *= inv2;
  }
  return {acc, 2.0 * last};
}

template <class Real>
Estimate<std::complex<Real>> hurwitz_one(Complex z0, std::int64_t N) {
  using C = std::complex<Real>;
  const C z(static_cast<Real>(z0.real()), static_cast<Real>(z0.imag()));
  detail::Compensated<C> acc;
  for (std::int64_t n = 1; n <= N; ++n) {
    const Real rn = static_cast<Real>(n);
    acc.add(-z / (rn * (C(rn) + z)));  // 1/(n+z) - 1/n
  }
  const auto a = digamma_asymptotic(C(static_cast<Real>(N + 1)));
  const auto b = digamma_asymptotic(C(static_cast<Real>(N + 1)) + z);
  const C v = acc.value() + a.value - b.value;
  return {v, a.err + b.err + 8.0 * detail::unit_roundoff<Real>() * static_cast<double>(N) * (1.0 + std::abs(z0))};
}

template <class Real>
ComplexEstimate hurwitz_plus_any(const Composition& s, Complex z, const NumericContext& ctx) {
  using C = std::complex<Real>;
  const std::int64_t N0 = std::max<std::int64_t>(20, static_cast<std::int64_t>(std::ceil(std::abs(z))) + 20);
  if (s == Composition{1}) return to_double(hurwitz_one<Real>(z, N0));
  const auto v = detail::hurwitz_plus<C>(s, C(static_cast<Real>(z.real()), static_cast<Real>(z.imag())), ctx, N0);
  return to_double(Estimate<C>{v.value, v.err});
}

void check_negative_poles(Complex z, const NumericContext& ctx) {
  // He_+ has poles at z = -1, -2, ...
  const double m = std::round(z.real());
  if (m <= -1 && std::abs(z - m) <= ctx.pole_guard) {
    throw PoleProximityError("z = " + point_str(z) + " is close to a pole of He_+");
  }
}

}  // namespace

ComplexEstimate hurwitz_eval(Side side, const Composition& s, Complex z, const NumericContext& ctx) {
  ctx.validate();
  if (s.empty()) return {Complex(1), 0.0};
  if (side == Side::Minus) {
    const Composition rs = s.reversed();
    if (!(rs.front() >= 2 || rs == Composition{1})) {
      throw std::invalid_argument("He_- needs last part >= 2 or s = (1): " + s.str());
    }
    auto v = hurwitz_eval(Side::Plus, rs, -z, ctx);
    if (s.weight() % 2 != 0) v.value = -v.value;
    return v;
  }
  if (!(s.front() >= 2 || s == Composition{1})) {
    throw std::invalid_argument("He_+ needs first part >= 2 or s = (1): " + s.str());
  }
  check_negative_poles(z, ctx);
  return ctx.extended() ? hurwitz_plus_any<long double>(s, z, ctx) : hurwitz_plus_any<double>(s, z, ctx);
}

RealEstimate trifactorization_residual(const Composition& s, Complex z, const NumericContext& ctx) {
  if (!is_multitangent_convergent(s)) {
    throw std::invalid_argument("trifactorization needs a convergent sequence: " + s.str());
  }
  const auto te = multitangent_eval_direct(s, z, ctx);
  const std::size_t r = s.length();
  Complex sum(0);
  double err = te.abs_err;
  const NumericContext hctx = ctx.with_target(ctx.target_abs_error / static_cast<double>(4 * r + 2));
  auto add = [&](const ComplexEstimate& p, const ComplexEstimate& m, Complex c) {
    sum += p.value * c * m.value;
    err += std::abs(c) * (p.abs_err * std::abs(m.value) + std::abs(p.value) * m.abs_err);
  };
  // Empty middle factor: s = s1 . s3.
  for (std::size_t j = 0; j <= r; ++j) {
    add(hurwitz_eval(Side::Plus, s.slice(0, j), z, hctx), hurwitz_eval(Side::Minus, s.slice(j, r), z, hctx),
        Complex(1));
  }
  // Middle factor of length one: Ce^(s_j) = z^(-s_j).
  for (std::size_t j = 0; j < r; ++j) {
    add(hurwitz_eval(Side::Plus, s.slice(0, j), z, hctx), hurwitz_eval(Side::Minus, s.slice(j + 1, r), z, hctx),
        std::pow(z, -s[j]));
  }
  return {std::abs(te.value - sum), err};
}

// ------------------------------------------------------------------ Fourier

namespace {

// alpha_k with T^_n = sum_k alpha_k n^(k-1), k = 2..max(s).
std::vector<ComplexEstimate> fourier_polynomial(const Composition& s, const NumericContext& ctx) {
  if (!is_multitangent_convergent(s)) {
    throw std::invalid_argument("Fourier coefficients need a convergent sequence: " + s.str());
  }
  const int M = s.max_part();
  std::vector<ComplexEstimate> alpha(static_cast<std::size_t>(M) + 1);
  const double pi = std::numbers::pi;
  for (int k = 2; k <= M; ++k) {
    CoeffExpr z;
    for (std::size_t j = 1; j <= s.length(); ++j) {
      if (s[j - 1] >= k) z += z_coeff(j, s[j - 1] - k, s);
    }
    if (z.is_zero()) continue;
    const auto v = mzv_numeric(z, ctx.with_target(ctx.target_abs_error / 4));
    // 2 i pi (-2 i pi)^(k-1) / (k-1)!
    const Complex f = Complex(0, 2 * pi) * std::pow(Complex(0, -2 * pi), k - 1) /
                      std::tgamma(static_cast<double>(k));
    alpha[static_cast<std::size_t>(k)] = {f * v.value, std::abs(f) * v.abs_err};
  }
  return alpha;
}

}  // namespace

ComplexEstimate fourier_coefficient(const Composition& s, long n, const NumericContext& ctx) {
  if (n == 0) throw std::invalid_argument("fourier_coefficient: n must be nonzero");
  const auto alpha = fourier_polynomial(s, ctx);
  Complex v(0);
  double err = 0;
  for (std::size_t k = 2; k < alpha.size(); ++k) {
    const double nk = std::pow(static_cast<double>(n), static_cast<double>(k - 1));
    v += alpha[k].value * nk;
    err += alpha[k].abs_err * std::abs(nk) + std::abs(alpha[k].value * nk) * 2e-16;
  }
  return {v, err};
}

Complex fourier_partial_sum(const Composition& s, Complex z, long N, const NumericContext& ctx) {
  const auto alpha = fourier_polynomial(s, ctx);
  const Complex q = std::exp(Complex(0, 2 * std::numbers::pi) * z);
  Complex acc(0);
  Complex qn(1);
  for (long n = 1; n <= N; ++n) {
    qn *= q;
    Complex t(0);
    for (std::size_t k = 2; k < alpha.size(); ++k) {
      t += alpha[k].value * std::pow(static_cast<double>(n), static_cast<double>(k - 1));
    }
    acc -= t * qn;
  }
  return acc;
}

double fourier_tail_bound(const Composition& s, double y, long N, const NumericContext& ctx) {
  const auto alpha = fourier_polynomial(s, ctx);
  const double aq = std::exp(-2 * std::numbers::pi * std::abs(y));
  double total = 0;
  for (long n = N + 1; n < N + 100000; ++n) {
    double t = 0;
    for (std::size_t k = 2; k < alpha.size(); ++k) {
      t += (std::abs(alpha[k].value) + alpha[k].abs_err) * std::pow(static_cast<double>(n), static_cast<double>(k - 1));
    }
    t *= std::pow(aq, static_cast<double>(n));
    total += t;
    if (n > N + 5 && t < 1e-30 * total) break;
    if (t == 0) break;
  }
  return total;
}

// ------------------------------------------------------------------ bounds

double first_upper_bound(const Composition& s, double im) {
  const double l = static_cast<double>(s.length());
  return 4 * l / std::pow(std::abs(im), static_cast<double>(s.weight()) - l - 1);
}

double second_upper_bound(const Composition& s, double im) {
  const double l = static_cast<double>(s.length());
  return std::pow(2 / std::sqrt(std::abs(im)), static_cast<double>(s.weight())) / std::tgamma(l + 1);
}

BoundsReport flatness_and_bounds_check(const Composition& s, const std::vector<Complex>& samples,
                                       const NumericContext& ctx) {
  if (!is_multitangent_convergent(s)) {
    throw std::invalid_argument("bounds need a convergent sequence: " + s.str());
  }
  BoundsReport rep;
  rep.sequence = s;
  const ReductionResult red = reduce_clean(s, ctx);
  const bool unit_free = is_unit_free(s);
  // Sup on Im z = 1 is bounded by the lemma bounds at |Im z| = 1.
  double sup1 = first_upper_bound(s, 1.0);
  if (unit_free) sup1 = std::min(sup1, second_upper_bound(s, 1.0));
  const double M1 = std::exp(2 * std::numbers::pi) * sup1;
  for (const Complex z : samples) {
    const double y = z.imag();
    if (y == 0) throw std::invalid_argument("bounds need non-real samples");
    const auto v = evaluate_reduction(red, z, ctx);
    const double a = std::abs(v.value) - v.abs_err;
    auto check = [&](const std::string& name, double value, double bound) {
      ++rep.checks;
      if (!(value <= bound)) rep.violations.push_back({z, name, value, bound});
    };
    check("first_upper_bound", a, first_upper_bound(s, y));
    if (unit_free && std::abs(z) >= 1) check("second_upper_bound", a, second_upper_bound(s, y));
    if (std::abs(y) >= 1) check("flatness", a * std::exp(2 * std::numbers::pi * std::abs(y)), M1);
  }
  return rep;
}

}  // namespace mtk
