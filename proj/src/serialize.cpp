#include "mtk/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace mtk {

Json composition_to_json(const Composition& s) {
  Json a = Json::array();
  for (int p : s.parts()) a.push_back(p);
  return a;
}

Composition composition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("composition must be a JSON array");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<int>() < 1) {
      throw std::invalid_argument("composition parts must be positive integers");
    }
    v.push_back(x.get<int>());
  }
  return Composition(std::move(v));
}

Json to_json(const CoeffExpr& e) {
  Json terms = Json::array();
  for (const auto& [mono, pr] : e.terms()) {
    Json factors = Json::array();
    for (const auto& f : mono.factors()) factors.push_back(composition_to_json(f));
    for (const auto& [m, c] : pr.terms()) {
      terms.push_back(Json{{"pi2", m}, {"coef", to_string(c)}, {"mzv", factors}});
    }
  }
  return Json{{"terms", terms}};
}

CoeffExpr coeff_expr_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw std::invalid_argument("coefficient expression needs a \"terms\" array");
  }
  CoeffExpr out;
  for (const auto& t : j.at("terms")) {
    const int m = t.value("pi2", 0);
    if (m < 0) throw std::invalid_argument("pi2 must be nonnegative");
    const Rational c = parse_rational(t.at("coef").get<std::string>());
    std::vector<Composition> factors;
    if (t.contains("mzv")) {
      for (const auto& f : t.at("mzv")) {
        Composition s = composition_from_json(f);
        if (s.empty() || s.front() < 2) throw std::invalid_argument("mzv factor must start with a part >= 2");
        factors.push_back(std::move(s));
      }
    }
    out.add(MzvMonomial(std::move(factors)), PiRational::pi_power(2 * m, c));
  }
  return out;
}

Json to_json(const ReductionResult& r) {
  Json coeffs = Json::array();
  for (const auto& [k, e] : r.coeffs) coeffs.push_back(Json{{"k", k}, {"value", to_json(e)}});
  return Json{{"sequence", composition_to_json(r.sequence)},
              {"class", std::string(to_string(classify(r.sequence)))},
              {"constant", to_json(CoeffExpr(r.constant))},
              {"coefficients", coeffs},
              {"text", reduction_text(r)}};
}

ReductionResult reduction_from_json(const Json& j) {
  ReductionResult r;
  r.sequence = composition_from_json(j.at("sequence"));
  const CoeffExpr c = coeff_expr_from_json(j.at("constant"));
  if (c.max_degree() > 0) throw std::invalid_argument("reduction constant must be a pi polynomial");
  r.constant = c.constant();
  for (const auto& t : j.at("coefficients")) {
    CoeffExpr v = coeff_expr_from_json(t.at("value"));
    if (!v.is_zero()) r.coeffs[t.at("k").get<int>()] = std::move(v);
  }
  return r;
}

Json to_json(const MtCombo& c) {
  Json terms = Json::array();
  for (const auto& [s, q] : c.terms()) terms.push_back(Json{{"sequence", composition_to_json(s)}, {"coef", to_string(q)}});
  return Json{{"terms", terms}};
}

MtCombo combo_from_json(const Json& j) {
  MtCombo out;
  for (const auto& t : j.at("terms")) {
    out.add(composition_from_json(t.at("sequence")), parse_rational(t.at("coef").get<std::string>()));
  }
  return out;
}

Config config_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  Config c;
  for (const auto& [key, v] : j.items()) {
    if (key == "precision") {
      c.numeric.working_precision = v.get<int>();
    } else if (key == "target_abs_error") {
      c.numeric.target_abs_error = v.get<double>();
    } else if (key == "truncation_cap") {
      c.numeric.truncation_cap = v.get<std::int64_t>();
    } else if (key == "guard_band") {
      c.numeric.pole_guard = v.get<double>();
    } else if (key == "basis_table") {
      c.basis_table = v.get<std::string>();
    } else if (key == "weight_cap") {
      c.weight_cap = v.get<int>();
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  c.numeric.validate();
  if (c.weight_cap < 1) throw std::invalid_argument("weight_cap must be positive");
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return config_from_json(Json::parse(in));
}

}  // namespace mtk
