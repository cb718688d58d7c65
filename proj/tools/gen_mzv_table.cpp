// Builds the MZV basis table from the regularized double shuffle relations:
// stuffle minus shuffle for convergent pairs, Hoffman's relation
// (1)*s - x1 sh s, and one definition row per basis monomial.

#include <fstream>
#include <iostream>
#include <map>
#include <vector>

#include <CLI11.hpp>

#include "mtk/basis_table.hpp"
#include "mtk/linalg.hpp"
#include "mtk/mzv_algebra.hpp"
#include "mtk/serialize.hpp"

namespace {

using mtk::Composition;
using mtk::MzvMonomial;
using mtk::Rational;
using Letters = std::vector<int>;

Letters to_letters(const Composition& s) {
  Letters w;
  for (int p : s.parts()) {
    for (int j = 1; j < p; ++j) w.push_back(0);
    w.push_back(1);
  }
  return w;
}

Composition from_letters(const Letters& w) {
  std::vector<int> parts;
  int run = 0;
  for (int l : w) {
    ++run;
    if (l == 1) {
      parts.push_back(run);
      run = 0;
    }
  }
  if (run != 0) throw std::logic_error("word does not end in x1");
  return Composition(std::move(parts));
}

std::map<Composition, Rational> shuffle_words(const Composition& a, const Composition& b) {
  const Letters la = to_letters(a);
  const Letters lb = to_letters(b);
  std::map<Composition, Rational> out;
  for (const auto& [w, m] : mtk::shuffle_letters<int>(la, lb)) out[from_letters(w)] += Rational(m);
  return out;
}

std::map<Composition, Rational> stuffle_words(const Composition& a, const Composition& b) {
  std::map<Composition, Rational> out;
  const mtk::WordPoly st = mtk::stuffle(a, b);
  for (const auto& [w, m] : st.terms()) out[w] += Rational(m);
  return out;
}

std::vector<MzvMonomial> default_basis(int w) {
  auto z = [](std::initializer_list<int> p) { return Composition(p); };
  switch (w) {
    case 2: return {MzvMonomial({z({2})})};
    case 3: return {MzvMonomial({z({3})})};
    case 4: return {MzvMonomial({z({4})})};
    case 5: return {MzvMonomial({z({5})}), MzvMonomial({z({2}), z({3})})};
    case 6: return {MzvMonomial({z({6})}), MzvMonomial({z({3}), z({3})})};
    case 7: return {MzvMonomial({z({7})}), MzvMonomial({z({2}), z({5})}), MzvMonomial({z({3}), z({4})})};
    case 8:
      return {MzvMonomial({z({8})}), MzvMonomial({z({2}), z({3}), z({3})}), MzvMonomial({z({3}), z({5})}),
              MzvMonomial({z({5, 3})})};
    default: throw std::invalid_argument("no declared basis for weight " + std::to_string(w));
  }
}

struct WeightResult {
  std::vector<MzvMonomial> basis;
  std::map<Composition, mtk::BasisForm> entries;
};

WeightResult solve_weight(int w) {
  WeightResult res;
  res.basis = default_basis(w);
  std::vector<Composition> words;
  for (const auto& s : mtk::compositions_of_weight(w)) {
    if (s.front() >= 2) words.push_back(s);
  }
  std::map<Composition, std::size_t> col;
  for (std::size_t j = 0; j < words.size(); ++j) col[words[j]] = j;
  const std::size_t nb = res.basis.size();
  const std::size_t ncols = words.size() + nb;

  std::vector<std::vector<Rational>> rows;
  auto push = [&](const std::map<Composition, Rational>& plus, const std::map<Composition, Rational>& minus) {
    std::vector<Rational> r(ncols);
    for (const auto& [s, c] : plus) {
      if (c == 0) continue;
      auto it = col.find(s);
      if (it == col.end()) throw std::logic_error("divergent word survived: " + s.str());
      r[it->second] += c;
    }
    for (const auto& [s, c] : minus) {
      if (c == 0) continue;
      auto it = col.find(s);
      if (it == col.end()) throw std::logic_error("divergent word survived: " + s.str());
      r[it->second] -= c;
    }
    rows.push_back(std::move(r));
  };

  for (int wa = 2; wa <= w - 2; ++wa) {
    for (const auto& a : mtk::compositions_of_weight(wa)) {
      if (a.front() < 2) continue;
      for (const auto& b : mtk::compositions_of_weight(w - wa)) {
        if (b.front() < 2 || b < a) continue;
        push(stuffle_words(a, b), shuffle_words(a, b));
      }
    }
  }
  for (const auto& c : mtk::compositions_of_weight(w - 1)) {
    if (c.front() < 2) continue;
    auto st = stuffle_words(Composition{1}, c);
    auto sh = shuffle_words(Composition{1}, c);
    // The divergent words cancel between the two products.
    std::map<Composition, Rational> diff = st;
    for (const auto& [s, m] : sh) diff[s] -= m;
    std::map<Composition, Rational> conv;
    for (const auto& [s, m] : diff) {
      if (m == 0) continue;
      if (s.front() < 2) throw std::logic_error("Hoffman row keeps a divergent word");
      conv[s] = m;
    }
    push(conv, {});
  }
  for (std::size_t j = 0; j < nb; ++j) {
    std::vector<Rational> r(ncols);
    r[words.size() + j] = 1;
    const mtk::CoeffExpr lin = mtk::linearize(mtk::CoeffExpr(res.basis[j], mtk::PiRational(1)));
    for (const auto& [m, pr] : lin.terms()) r[col.at(m.factors().front())] -= pr.coefficient(0);
    rows.push_back(std::move(r));
  }

  mtk::RationalMatrix m(rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
  }
  const mtk::EchelonForm ef = mtk::echelon(m);
  if (ef.rank() != words.size()) {
    throw std::runtime_error("weight " + std::to_string(w) + ": relations determine " + std::to_string(ef.rank()) +
                             " of " + std::to_string(words.size()) + " words, or the basis is dependent");
  }
  for (std::size_t i = 0; i < ef.rank(); ++i) {
    const std::size_t p = ef.pivots[i];
    if (p != i) throw std::runtime_error("weight " + std::to_string(w) + ": a basis column became a pivot");
    mtk::BasisForm f;
    for (std::size_t j = 0; j < nb; ++j) {
      const Rational c = -ef.rref(i, words.size() + j);
      if (c != 0) f[res.basis[j]] = c;
    }
    res.entries[words[p]] = std::move(f);
  }
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate the MZV basis table"};
  int max_weight = 8;
  std::string out_path = "mzv_table.json";
  bool check = false;
  app.add_option("--max-weight", max_weight, "largest weight")->check(CLI::Range(2, 8));
  app.add_option("-o,--output", out_path, "output file");
  app.add_flag("--verify", check, "reload the written table with numeric verification");
  CLI11_PARSE(app, argc, argv);

  try {
    mtk::Json basis = mtk::Json::object();
    mtk::Json entries = mtk::Json::array();
    for (int w = 2; w <= max_weight; ++w) {
      const WeightResult r = solve_weight(w);
      mtk::Json list = mtk::Json::array();
      for (const auto& b : r.basis) {
        mtk::Json factors = mtk::Json::array();
        for (const auto& f : b.factors()) factors.push_back(mtk::composition_to_json(f));
        list.push_back(factors);
      }
      basis[std::to_string(w)] = list;
      for (const auto& [word, f] : r.entries) {
        mtk::CoeffExpr e;
        for (const auto& [mono, c] : f) e.add(mono, mtk::PiRational(c));
        const bool is_basis = f.size() == 1 && f.begin()->second == 1 && f.begin()->first == MzvMonomial::single(word);
        entries.push_back(mtk::Json{{"word", mtk::composition_to_json(word)},
                                    {"value", mtk::to_json(e)},
                                    {"provenance", is_basis ? "basis element" : "double shuffle"}});
      }
      std::cerr << "weight " << w << ": " << r.entries.size() << " words, basis size " << r.basis.size() << "\n";
    }
    mtk::Json doc{{"format", "mtk-mzv-basis-table"},
                  {"version", 1},
                  {"max_weight", max_weight},
                  {"provenance",
                   "exact solution of the stuffle/shuffle and Hoffman relations with the declared basis"},
                  {"basis", basis},
                  {"entries", entries}};
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << doc.dump(1) << "\n";
    out.close();
    if (check) {
      const auto t = mtk::MzvBasisTable::load(out_path, true);
      std::cerr << "verified " << t.entries().size() << " entries, max deviation " << t.verify() << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "gen_mzv_table: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
