#include "mtk/lab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mtk/errors.hpp"
#include "mtk/mzv_numeric.hpp"
#include "mtk/reduction.hpp"
#include "mtk/serialize.hpp"

namespace mtk {

const MzvBasisTable& LabContext::basis_table() const { return table ? *table : MzvBasisTable::default_table(); }

namespace {

void check_cap(int p, const LabContext& ctx) {
  if (p > ctx.weight_cap) {
    throw std::invalid_argument("weight " + std::to_string(p) + " exceeds the weight cap " +
                                std::to_string(ctx.weight_cap));
  }
}

void require_coverage(int w, const LabContext& ctx) {
  const auto& t = ctx.basis_table();
  if (!t.covers(w)) {
    throw CoverageError("MZV table covers weights up to " + std::to_string(t.max_weight()) + ", weight " +
                        std::to_string(w) + " needed");
  }
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  Complex next() {
    const double x = re_(rng_);
    const double y = im_(rng_);
    return {x, y};
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> re_{-0.5, 0.5};
  std::uniform_real_distribution<double> im_{0.4, 1.2};
};

NumericContext recheck_numeric(const LabContext& ctx) {
  return ctx.numeric.with_target(std::max(ctx.numeric.target_abs_error, ctx.recheck_tolerance * 1e-3));
}

template <class Target>
void recheck(const MtCombo& c, Target target, const std::string& what, Sampler& sampler, const LabContext& ctx) {
  const NumericContext nctx = recheck_numeric(ctx);
  for (int i = 0; i < 2; ++i) {
    const Complex z = sampler.next();
    const ComplexEstimate lhs = combo_eval(c, z, nctx);
    const Complex rhs = target(z, nctx);
    const double dev = std::abs(lhs.value - rhs);
    if (!(dev <= ctx.recheck_tolerance)) {
      std::ostringstream msg;
      msg << what << " failed its numeric recheck at z = " << z.real() << (z.imag() < 0 ? "" : "+") << z.imag()
          << "i: |lhs - rhs| = " << dev << " for " << c.str();
      throw IntegrityError(msg.str());
    }
  }
}

void add_coord(Coordinates& out, const MonoKey& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = out.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

std::vector<Rational> primitive(std::vector<Rational> v) {
  BigInt l = 1;
  for (const auto& x : v) {
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  BigInt g = 0;
  for (auto& x : v) {
    x *= l;
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g == 0) return v;
  Rational sign = 1;
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0) sign = -1;
      break;
    }
  }
  for (auto& x : v) x = x * sign / Rational(g);
  return v;
}

struct System {
  std::vector<MonoKey> rows;
  RationalMatrix matrix;
};

System assemble(const std::vector<Coordinates>& cols, const Coordinates* extra = nullptr) {
  std::set<MonoKey> keys;
  for (const auto& c : cols) {
    for (const auto& [k, v] : c) keys.insert(k);
  }
  if (extra) {
    for (const auto& [k, v] : *extra) keys.insert(k);
  }
  System sys;
  sys.rows.assign(keys.begin(), keys.end());
  sys.matrix = RationalMatrix(sys.rows.size(), cols.size());
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto it = cols[j].find(sys.rows[i]);
      if (it != cols[j].end()) sys.matrix(i, j) = it->second;
    }
  }
  return sys;
}

std::vector<Rational> as_vector(const System& sys, const Coordinates& c) {
  std::vector<Rational> v(sys.rows.size());
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    auto it = c.find(sys.rows[i]);
    if (it != c.end()) v[i] = it->second;
  }
  return v;
}

MtCombo combo_from(const std::vector<Composition>& seqs, const std::vector<Rational>& x) {
  MtCombo c;
  for (std::size_t j = 0; j < seqs.size(); ++j) c.add(seqs[j], x[j]);
  return c;
}

std::vector<Coordinates> coordinates_of(const std::vector<Composition>& seqs, const LabContext& ctx) {
  std::vector<Coordinates> out;
  out.reserve(seqs.size());
  for (const auto& s : seqs) out.push_back(reduction_coordinates(s, ctx));
  return out;
}

// Solves sum_j x_j cols_j = target over the unit-free compositions of weight w.
MtCombo solve_unit_free(int w, const Coordinates& target, const std::string& what, const LabContext& ctx) {
  const auto seqs = enumerate_compositions(w, CompositionClass::UnitFree);
  const auto cols = coordinates_of(seqs, ctx);
  const System sys = assemble(cols, &target);
  const auto x = solve(sys.matrix, as_vector(sys, target));
  if (!x) {
    throw ProjectionNotFound(what + " has no solution over the unit-free multitangents of weight " +
                             std::to_string(w) + " (target " + coordinates_str(target) + ")");
  }
  return combo_from(seqs, *x);
}

std::string seq_label(const Composition& s) { return "Te[" + s.str() + "]"; }

}  // namespace

std::vector<Composition> enumerate_compositions(int p, CompositionClass cls) {
  if (p < 0) throw std::invalid_argument("enumerate_compositions: negative weight");
  std::vector<Composition> out;
  for (auto& s : compositions_of_weight(p)) {
    if (s.empty()) continue;
    bool keep = true;
    switch (cls) {
      case CompositionClass::All: break;
      case CompositionClass::Convergent: keep = is_multitangent_convergent(s); break;
      case CompositionClass::MzvConvergent: keep = is_mzv_convergent(s); break;
      case CompositionClass::UnitFree: keep = is_unit_free(s); break;
    }
    if (keep) out.push_back(std::move(s));
  }
  return out;
}

std::uint64_t fibonacci(int n) {
  if (n < 0) throw std::invalid_argument("fibonacci: negative index");
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t t = a + b;
    a = b;
    b = t;
  }
  return a;
}

Coordinates reduction_coordinates(const Composition& s, const LabContext& ctx) {
  if (s.empty()) throw std::invalid_argument("reduction_coordinates: empty sequence");
  const auto& table = ctx.basis_table();
  const ReductionResult r = is_multitangent_convergent(s) ? reduce_clean(s, ctx.numeric) : reduce(s);
  Coordinates out;
  for (const auto& [m, c] : table.normalize(CoeffExpr(r.constant))) add_coord(out, {0, m}, c);
  for (const auto& [k, e] : r.coeffs) {
    for (const auto& [m, c] : table.normalize(e)) add_coord(out, {k, m}, c);
  }
  return out;
}

Coordinates combo_coordinates(const MtCombo& c, const LabContext& ctx) {
  Coordinates out;
  for (const auto& [s, q] : c.terms()) {
    for (const auto& [key, v] : reduction_coordinates(s, ctx)) add_coord(out, key, q * v);
  }
  return out;
}

std::string coordinates_str(const Coordinates& c) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, v] : c) {
    const auto& [k, m] = key;
    std::string t = m.is_one() ? "" : m.str();
    if (k > 0) t += (t.empty() ? "" : "·") + ("Te^" + std::to_string(k));
    if (t.empty()) t = "1";
    const bool neg = v < 0;
    const Rational a = neg ? Rational(-v) : v;
    if (a != 1) t = to_string(a) + "·" + t;
    if (first) {
      out = neg ? "-" + t : t;
    } else {
      out += neg ? " - " + t : " + " + t;
    }
    first = false;
  }
  return out;
}

ComplexEstimate combo_eval(const MtCombo& c, Complex z, const NumericContext& ctx) {
  Complex total(0);
  double err = 0;
  const double n = static_cast<double>(std::max<std::size_t>(1, c.size()));
  for (const auto& [s, q] : c.terms()) {
    const double qd = std::abs(to_long_double(q));
    const NumericContext tctx = ctx.with_target(ctx.target_abs_error / (n * std::max(1.0, qd)));
    ComplexEstimate v;
    if (s.length() == 1) {
      v = monotangent_eval(s[0], z, tctx);
    } else if (is_multitangent_convergent(s)) {
      v = multitangent_eval_direct(s, z, tctx);
    } else {
      v = evaluate_reduction(reduce(s), z, tctx);
    }
    total += static_cast<double>(to_long_double(q)) * v.value;
    err += qd * v.abs_err;
  }
  return {total, err};
}

std::vector<Complex> recheck_points(std::uint64_t seed, std::size_t count) {
  Sampler s(seed);
  std::vector<Complex> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(s.next());
  return out;
}

bool RelationKernel::contains(const MtCombo& c) const {
  std::vector<Rational> v(sequences.size());
  std::size_t found = 0;
  for (std::size_t j = 0; j < sequences.size(); ++j) {
    v[j] = c.coefficient(sequences[j]);
    if (v[j] != 0) ++found;
  }
  if (found != c.size()) return false;
  std::vector<std::vector<Rational>> basis;
  for (const auto& r : relations) {
    std::vector<Rational> b(sequences.size());
    for (std::size_t j = 0; j < sequences.size(); ++j) b[j] = r.coefficient(sequences[j]);
    basis.push_back(std::move(b));
  }
  return in_span(basis, v);
}

RelationKernel relation_kernel(int p, const LabContext& ctx) {
  if (p < 2) throw std::invalid_argument("relation_kernel: weight must be at least 2");
  check_cap(p, ctx);
  require_coverage(p - 2, ctx);
  RelationKernel out;
  out.weight = p;
  out.sequences = enumerate_compositions(p, CompositionClass::Convergent);
  const System sys = assemble(coordinates_of(out.sequences, ctx));
  out.rows = sys.rows;
  out.matrix = sys.matrix;
  Sampler sampler(ctx.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(p)));
  for (const auto& v : kernel(sys.matrix)) {
    MtCombo c = combo_from(out.sequences, primitive(v));
    recheck(c, [](Complex, const NumericContext&) { return Complex(0); },
            "relation " + c.str() + " = 0", sampler, ctx);
    out.relations.push_back(std::move(c));
  }
  return out;
}

MtCombo differentiate_combo(const MtCombo& c) {
  MtCombo out;
  for (const auto& [s, q] : c.terms()) {
    std::vector<int> parts(s.parts().begin(), s.parts().end());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const int si = parts[i];
      parts[i] += 1;
      out.add(Composition(parts), -q * si);
      parts[i] -= 1;
    }
  }
  return out;
}

MtCombo projection(const Composition& sigma, const LabContext& ctx) {
  if (sigma.empty() || !is_mzv_convergent(sigma)) {
    throw std::invalid_argument("projection needs a sequence with first part >= 2: " + sigma.str());
  }
  const int w = sigma.weight() + 2;
  check_cap(w, ctx);
  require_coverage(sigma.weight(), ctx);
  Coordinates target;
  for (const auto& [m, c] : ctx.basis_table().normalize(ze(sigma))) add_coord(target, {2, m}, c);
  MtCombo c = solve_unit_free(w, target, "projection of Ze[" + sigma.str() + "]·Te^2", ctx);
  Sampler sampler(ctx.seed ^ std::hash<std::string>{}("projection " + sigma.str()));
  recheck(
      c,
      [&](Complex z, const NumericContext& n) {
        return ze_numeric(sigma, n).value * monotangent_eval(2, z, n).value;
      },
      "projection of Ze[" + sigma.str() + "]·Te^2", sampler, ctx);
  return c;
}

MtCombo unit_cleanse(const Composition& s, const LabContext& ctx) {
  if (s.empty()) throw std::invalid_argument("unit_cleanse: empty sequence");
  if (is_unit_free(s)) return MtCombo(s, 1);
  check_cap(s.weight(), ctx);
  MtCombo c = solve_unit_free(s.weight(), reduction_coordinates(s, ctx), "unit cleansing of " + seq_label(s), ctx);
  Sampler sampler(ctx.seed ^ std::hash<std::string>{}("cleanse " + s.str()));
  const MtCombo self(s, 1);
  recheck(
      c, [&](Complex z, const NumericContext& n) { return combo_eval(self, z, n).value; },
      "unit cleansing of " + seq_label(s), sampler, ctx);
  return c;
}

RankMatrix rank_matrix(int p, RankRows rows, const LabContext& ctx) {
  if (p < 2) throw std::invalid_argument("rank_matrix: weight must be at least 2");
  check_cap(p + 2, ctx);
  require_coverage(p, ctx);
  RankMatrix out;
  out.weight = p;
  const auto cls = rows == RankRows::UnitFree ? CompositionClass::UnitFree : CompositionClass::Convergent;
  for (auto& s : enumerate_compositions(p + 2, cls)) {
    if (s.length() >= 2) out.rows.push_back(std::move(s));
  }
  out.columns = ctx.basis_table().basis(p);
  out.entries = RationalMatrix(out.rows.size(), out.columns.size());
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    const Coordinates c = reduction_coordinates(out.rows[i], ctx);
    for (std::size_t j = 0; j < out.columns.size(); ++j) {
      auto it = c.find({2, out.columns[j]});
      if (it != c.end()) out.entries(i, j) = it->second;
    }
  }
  out.rank = mtk::rank(out.entries);
  out.conjectural_basis = out.columns.size() > 1;
  return out;
}

std::uint64_t conjectural_dimension(int p) {
  if (p < 2) return 0;
  std::vector<std::int64_t> d{1, 1, 2, 3};
  while (static_cast<int>(d.size()) < p - 1) {
    const std::size_t n = d.size();
    d.push_back(d[n - 1] + d[n - 2] - d[n - 4]);
  }
  return static_cast<std::uint64_t>(d[static_cast<std::size_t>(p - 2)]);
}

std::vector<DimensionRow> dimension_report(int p_max, const LabContext& ctx) {
  std::vector<DimensionRow> out;
  for (int p = 2; p <= p_max; ++p) {
    const RelationKernel k = relation_kernel(p, ctx);
    out.push_back({p, k.sequences.size(), k.dimension(), k.span_dimension(), conjectural_dimension(p)});
  }
  return out;
}

void table_emit(std::ostream& out, int p_max, TableFormat format, bool include_divergent, const LabContext& ctx) {
  check_cap(p_max, ctx);
  const NumericContext nctx = ctx.numeric.with_target(1e-9);
  std::vector<Composition> seqs;
  for (int w = 1; w <= p_max; ++w) {
    for (auto& s : enumerate_compositions(w, include_divergent ? CompositionClass::All : CompositionClass::Convergent)) {
      seqs.push_back(std::move(s));
    }
  }
  Json rows = Json::array();
  if (format == TableFormat::Csv) out << "sequence,class,k,coefficient,value\n";
  for (const auto& s : seqs) {
    const ReductionResult r = is_multitangent_convergent(s) ? reduce_clean(s, ctx.numeric) : reduce(s);
    const std::string cls(to_string(classify(s)));
    switch (format) {
      case TableFormat::Text: out << reduction_text(r) << "\n"; break;
      case TableFormat::Csv: {
        auto row = [&](int k, const std::string& coef, double v) {
          out << '"' << s.str() << "\"," << cls << ',' << k << ",\"" << coef << "\"," << v << "\n";
        };
        if (r.is_zero()) row(0, "0", 0.0);
        if (!r.constant.is_zero()) row(0, r.constant.str(), static_cast<double>(r.constant.value()));
        for (const auto& [k, e] : r.coeffs) row(k, e.str(), mzv_numeric(e, nctx).value);
        break;
      }
      case TableFormat::Json: {
        Json j = to_json(r);
        Json values = Json::array();
        if (!r.constant.is_zero()) {
          values.push_back(Json{{"k", 0}, {"value", static_cast<double>(r.constant.value())}});
        }
        for (const auto& [k, e] : r.coeffs) {
          const auto v = mzv_numeric(e, nctx);
          values.push_back(Json{{"k", k}, {"value", v.value}, {"abs_err", v.abs_err}});
        }
        j["numeric"] = values;
        rows.push_back(std::move(j));
        break;
      }
    }
  }
  if (format == TableFormat::Json) {
    out << Json{{"max_weight", p_max}, {"include_divergent", include_divergent}, {"rows", rows}}.dump(1) << "\n";
  }
  if (!out) throw std::runtime_error("table_emit: write failed");
}

}  // namespace mtk
