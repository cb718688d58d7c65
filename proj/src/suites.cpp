#include "mtk/suites.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "mtk/combo.hpp"
#include "mtk/lab.hpp"

namespace mtk {

Suite parse_suite(std::string_view name) {
  if (name == "symmetrel") return Suite::Symmetrel;
  if (name == "parity") return Suite::Parity;
  if (name == "diff") return Suite::Diff;
  if (name == "flatness") return Suite::Flatness;
  if (name == "trifact") return Suite::Trifact;
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Symmetrel: return "symmetrel";
    case Suite::Parity: return "parity";
    case Suite::Diff: return "diff";
    case Suite::Flatness: return "flatness";
    case Suite::Trifact: return "trifact";
  }
  return "?";
}

namespace {

class Points {
 public:
  explicit Points(std::uint64_t seed) : rng_(seed) {}
  Complex next() { return {re_(rng_), im_(rng_)}; }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> re_{-0.5, 0.5};
  std::uniform_real_distribution<double> im_{0.4, 1.2};
};

std::vector<Composition> convergent_up_to(int w) {
  std::vector<Composition> out;
  for (int p = 2; p <= w; ++p) {
    for (auto& s : enumerate_compositions(p, CompositionClass::Convergent)) out.push_back(std::move(s));
  }
  return out;
}

Complex te(const Composition& s, Complex z, const NumericContext& ctx) {
  return combo_eval(MtCombo(s, 1), z, ctx).value;
}

void record(SuiteReport& rep, const std::string& what, Complex z, Complex lhs, Complex rhs, double tol) {
  const double dev = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
  ++rep.checks;
  rep.max_deviation = std::max(rep.max_deviation, dev);
  if (!(dev <= tol)) rep.failures.push_back({what, z, dev});
}

// f'(z) from M equally spaced points on a circle of radius h.
template <class F>
Complex cauchy_derivative(F f, Complex z, double h, int M) {
  Complex acc(0);
  for (int j = 0; j < M; ++j) {
    const Complex w = std::polar(1.0, 2 * std::numbers::pi * j / M);
    acc += f(z + h * w) / w;
  }
  return acc / (static_cast<double>(M) * h);
}

}  // namespace

SuiteReport run_suite(Suite suite, const SuiteOptions& opts) {
  SuiteReport rep;
  rep.suite = suite;
  Points pts(opts.seed ^ static_cast<std::uint64_t>(suite));
  const NumericContext& ctx = opts.numeric;
  switch (suite) {
    case Suite::Symmetrel: {
      const auto seqs = convergent_up_to(opts.max_weight - 2);
      for (std::size_t i = 0; i < seqs.size(); ++i) {
        for (std::size_t j = i; j < seqs.size(); ++j) {
          const auto& a = seqs[i];
          const auto& b = seqs[j];
          if (a.weight() + b.weight() > opts.max_weight) continue;
          const WordPoly prod = stuffle(a, b);
          MtCombo rhs;
          for (const auto& [c, m] : prod.terms()) rhs.add(c, Rational(m));
          for (std::size_t k = 0; k < opts.samples; ++k) {
            const Complex z = pts.next();
            record(rep, "Te[" + a.str() + "]·Te[" + b.str() + "]", z, te(a, z, ctx) * te(b, z, ctx),
                   combo_eval(rhs, z, ctx).value, opts.tolerance);
          }
        }
      }
      break;
    }
    case Suite::Parity: {
      for (const auto& s : convergent_up_to(opts.max_weight)) {
        for (std::size_t k = 0; k < opts.samples; ++k) {
          const Complex z = pts.next();
          record(rep, "Te[" + s.str() + "](-z)", z, te(s, -z, ctx),
                 static_cast<double>(sign_pow(s.weight())) * te(s.reversed(), z, ctx), opts.tolerance);
        }
      }
      break;
    }
    case Suite::Diff: {
      for (const auto& s : convergent_up_to(opts.max_weight - 1)) {
        const MtCombo d = differentiate_combo(MtCombo(s, 1));
        const NumericContext fine = ctx.with_target(std::min(ctx.target_abs_error, 1e-13));
        for (std::size_t k = 0; k < opts.samples; ++k) {
          const Complex z = pts.next();
          const Complex num = cauchy_derivative([&](Complex w) { return te(s, w, fine); }, z, 0.15, 24);
          record(rep, "d/dz Te[" + s.str() + "]", z, num, combo_eval(d, z, ctx).value, opts.tolerance);
        }
      }
      break;
    }
    case Suite::Flatness: {
      std::vector<Complex> line;
      for (int j = 0; j < 10; ++j) {
        const double y = 1 + 0.25 * j;
        line.emplace_back(0.3, y);
        line.emplace_back(0.3, -y);
      }
      for (const auto& s : convergent_up_to(opts.max_weight)) {
        const BoundsReport b = flatness_and_bounds_check(s, line, ctx);
        rep.checks += b.checks;
        for (const auto& v : b.violations) {
          rep.failures.push_back({v.check + " for Te[" + s.str() + "]", v.z, v.value / v.bound});
        }
      }
      break;
    }
    case Suite::Trifact: {
      for (const auto& s : convergent_up_to(opts.max_weight)) {
        for (std::size_t k = 0; k < opts.samples; ++k) {
          const Complex z = pts.next();
          const RealEstimate r = trifactorization_residual(s, z, ctx);
          const double dev = r.value / std::max(1.0, std::abs(te(s, z, ctx)));
          ++rep.checks;
          rep.max_deviation = std::max(rep.max_deviation, dev);
          if (!(dev <= opts.tolerance)) rep.failures.push_back({"trifactorization of Te[" + s.str() + "]", z, dev});
        }
      }
      break;
    }
  }
  return rep;
}

}  // namespace mtk
