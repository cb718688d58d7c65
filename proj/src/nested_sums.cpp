#include "detail/nested_sums.hpp"

namespace mtk::detail {

namespace {

// zeta_H(sigma, w+1) ~ sum_j h_j w^(-j), powers up to J.
std::vector<Rational> hurwitz_series(int sigma, int J) {
  std::vector<Rational> h(static_cast<std::size_t>(std::max(J, 0)) + 1);
  if (sigma - 1 <= J) h[static_cast<std::size_t>(sigma - 1)] += Rational(1, sigma - 1);
  if (sigma <= J) h[static_cast<std::size_t>(sigma)] += Rational(-1, 2);
  Rational rising = sigma;  // (sigma)_(2p-1), starting at p = 1
  for (int p = 1; sigma + 2 * p - 1 <= J; ++p) {
    if (p > 1) rising *= Rational((sigma + 2 * p - 3) * (sigma + 2 * p - 2));
    h[static_cast<std::size_t>(sigma + 2 * p - 1)] +=
        bernoulli(static_cast<unsigned>(2 * p)) * rising /
        Rational(factorial(static_cast<unsigned>(2 * p)));
  }
  return h;
}

std::mutex series_mutex;
std::map<std::pair<Composition, int>, std::vector<Rational>> series_cache;
std::map<Composition, std::vector<long double>> real_cache;

std::vector<Rational> series(const Composition& t, int J) {
  if (t.empty()) {
    std::vector<Rational> one(static_cast<std::size_t>(J) + 1);
    one[0] = 1;
    return one;
  }
  {
    std::lock_guard lock(series_mutex);
    auto it = series_cache.find({t, J});
    if (it != series_cache.end()) return it->second;
  }
  const Composition inner = t.slice(0, t.length() - 1);
  const int ta = t.back();
  const std::vector<Rational> c = series(inner, J - ta + 1);
  std::vector<Rational> out(static_cast<std::size_t>(J) + 1);
  for (std::size_t q = 0; q < c.size(); ++q) {
    if (c[q] == 0) continue;
    const int sigma = ta + static_cast<int>(q);
    if (sigma < 2) throw std::logic_error("tail series needs first part >= 2");
    const auto h = hurwitz_series(sigma, J);
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (h[j] != 0) out[j] += c[q] * h[j];
    }
  }
  std::lock_guard lock(series_mutex);
  return series_cache.emplace(std::make_pair(t, J), std::move(out)).first->second;
}

}  // namespace

const std::vector<Rational>& tail_series_exact(const Composition& t) {
  if (t.empty()) {
    static const std::vector<Rational> one{Rational(1), Rational(0)};
    return one;
  }
  const int J = t.weight() + kTailOrder;
  series(t, J);
  std::lock_guard lock(series_mutex);
  return series_cache.at({t, J});
}

const std::vector<long double>& tail_series(const Composition& t) {
  {
    std::lock_guard lock(series_mutex);
    auto it = real_cache.find(t);
    if (it != real_cache.end()) return it->second;
  }
  const auto& exact = tail_series_exact(t);
  std::vector<long double> v;
  v.reserve(exact.size());
  for (const auto& q : exact) v.push_back(to_long_double(q));
  std::lock_guard lock(series_mutex);
  return real_cache.emplace(t, std::move(v)).first->second;
}

}  // namespace mtk::detail
