// Command-line front end.
// Exit codes: 0 success, 1 usage or other error, 2 numeric recheck failure,
// 3 MZV table coverage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mtk/basis_table.hpp"
#include "mtk/errors.hpp"
#include "mtk/lab.hpp"
#include "mtk/numerics.hpp"
#include "mtk/reduction.hpp"
#include "mtk/serialize.hpp"
#include "mtk/suites.hpp"

namespace {

constexpr int kExitOther = 1;
constexpr int kExitRecheck = 2;
constexpr int kExitCoverage = 3;

mtk::Complex parse_complex(const std::string& text) {
  static const std::regex re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
  static const std::regex pure_im(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pure_im)) {
    const double v = m[2].matched ? std::stod(m[2]) : 1.0;
    return {0.0, m[1] == "-" ? -v : v};
  }
  if (std::regex_match(text, m, re) && (m[1].matched || m[2].matched)) {
    const double re_part = m[1].matched ? std::stod(m[1]) : 0.0;
    double im_part = 0;
    if (m[2].matched) {
      im_part = m[3].matched ? std::stod(m[3]) : 1.0;
      if (m[2] == "-") im_part = -im_part;
    }
    return {re_part, im_part};
  }
  throw std::invalid_argument("cannot parse complex number: " + text);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

struct Global {
  std::string config_path;
  std::string table_path;
  mtk::Config config;
  std::optional<mtk::MzvBasisTable> table;

  void init() {
    if (!config_path.empty()) config = mtk::load_config(config_path);
    if (!table_path.empty()) config.basis_table = table_path;
    if (config.basis_table) table = mtk::MzvBasisTable::load(*config.basis_table, true, config.numeric);
  }

  [[nodiscard]] mtk::LabContext lab() const {
    mtk::LabContext c;
    c.numeric = config.numeric;
    c.weight_cap = config.weight_cap;
    if (table) c.table = &*table;
    return c;
  }
};

void print_combo(const mtk::MtCombo& c, bool json) {
  if (json) {
    std::cout << mtk::to_json(c).dump() << "\n";
  } else {
    std::cout << c.str() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multitangent toolkit"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--config", g.config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--table", g.table_path, "MZV basis table (overrides the config)")->check(CLI::ExistingFile);

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a multitangent into monotangents");
  std::string seq;
  bool json = false;
  bool raw = false;
  reduce_cmd->add_option("seq", seq, "sequence, e.g. 2,1,3")->required();
  reduce_cmd->add_flag("--json", json, "JSON output");
  reduce_cmd->add_flag("--raw", raw, "keep the Te^1 coefficient of convergent sequences");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a multitangent");
  std::vector<std::string> zs;
  bool direct = false;
  bool reduced = false;
  eval_cmd->add_option("seq", seq, "sequence")->required();
  eval_cmd->add_option("--z", zs, "point a+bi (repeatable)")->required();
  auto* fd = eval_cmd->add_flag("--direct", direct, "truncated bilateral sum");
  auto* fr = eval_cmd->add_flag("--reduced", reduced, "through the reduction into monotangents");
  fd->excludes(fr);
  bool no_header = false;
  eval_cmd->add_flag("--no-header", no_header, "omit the CSV header");

  // table
  auto* table_cmd = app.add_subcommand("table", "table of reductions");
  int max_weight = 6;
  std::string format = "text";
  std::string output;
  bool divergent = false;
  table_cmd->add_option("--max-weight", max_weight, "largest weight")->check(CLI::PositiveNumber);
  table_cmd->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  table_cmd->add_option("-o,--output", output, "output file (default stdout)");
  table_cmd->add_flag("--divergent", divergent, "include divergent sequences");

  // relations
  auto* rel_cmd = app.add_subcommand("relations", "Q-linear relations among convergent multitangents");
  int weight = 6;
  rel_cmd->add_option("--weight", weight, "weight")->required();
  rel_cmd->add_flag("--json", json, "JSON output");

  // dims
  auto* dims_cmd = app.add_subcommand("dims", "span dimensions beside the conjectural sequence");
  dims_cmd->add_option("--max-weight", max_weight, "largest weight")->check(CLI::PositiveNumber);

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "rank of the Te^2 coefficient matrix");
  bool convergent_rows = false;
  rank_cmd->add_option("--weight", weight, "MZV weight p (rows have weight p+2)")->required();
  rank_cmd->add_flag("--convergent-rows", convergent_rows, "use all convergent rows instead of unit-free ones");

  // project / cleanse
  auto* proj_cmd = app.add_subcommand("project", "write Ze^sigma Te^2 as a combination of multitangents");
  proj_cmd->add_option("seq", seq, "sigma")->required();
  proj_cmd->add_flag("--json", json, "JSON output");
  auto* clean_cmd = app.add_subcommand("cleanse", "rewrite Te^s over unit-free multitangents");
  clean_cmd->add_option("seq", seq, "sequence")->required();
  clean_cmd->add_flag("--json", json, "JSON output");

  // fourier
  auto* four_cmd = app.add_subcommand("fourier", "Fourier coefficients T^_n");
  long n_max = 5;
  std::string zf;
  four_cmd->add_option("seq", seq, "sequence")->required();
  four_cmd->add_option("--n", n_max, "number of coefficients")->check(CLI::PositiveNumber);
  four_cmd->add_option("--z", zf, "also compare the partial sum with direct evaluation at z");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "run a numeric property suite");
  std::string suite;
  std::size_t samples = 2;
  std::uint64_t seed = mtk::SuiteOptions{}.seed;
  ver_cmd->add_option("--suite", suite, "suite")
      ->required()
      ->check(CLI::IsMember({"symmetrel", "parity", "diff", "flatness", "trifact"}));
  ver_cmd->add_option("--samples", samples, "random points per identity");
  ver_cmd->add_option("--max-weight", max_weight, "total weight bound");
  ver_cmd->add_option("--seed", seed, "sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    g.init();
    const mtk::LabContext lab = g.lab();
    const mtk::NumericContext& nctx = lab.numeric;

    if (*reduce_cmd) {
      const auto s = mtk::Composition::parse(seq);
      const auto r = (raw || !mtk::is_multitangent_convergent(s)) ? mtk::reduce(s) : mtk::reduce_clean(s, nctx);
      std::cout << (json ? mtk::to_json(r).dump() : mtk::reduction_text(r)) << "\n";
    } else if (*eval_cmd) {
      const auto s = mtk::Composition::parse(seq);
      if (!no_header) std::cout << "sequence,z_re,z_im,value_re,value_im,method,abs_err_bound\n";
      for (const auto& zt : zs) {
        const mtk::Complex z = parse_complex(zt);
        std::string method;
        mtk::ComplexEstimate v;
        if (direct) {
          method = "direct";
          v = mtk::multitangent_eval_direct(s, z, nctx);
        } else if (reduced || !mtk::is_multitangent_convergent(s)) {
          method = "reduced";
          v = mtk::is_multitangent_convergent(s) ? mtk::multitangent_eval_reduced(s, z, nctx)
                                                  : mtk::evaluate_reduction(mtk::reduce(s), z, nctx);
        } else if (s.length() == 1) {
          method = "monotangent";
          v = mtk::monotangent_eval(s[0], z, nctx);
        } else {
          method = "direct";
          v = mtk::multitangent_eval_direct(s, z, nctx);
        }
        std::cout << '"' << s.str() << "\"," << fmt(z.real()) << ',' << fmt(z.imag()) << ',' << fmt(v.value.real())
                  << ',' << fmt(v.value.imag()) << ',' << method << ',' << fmt(v.abs_err) << "\n";
      }
    } else if (*table_cmd) {
      const auto f = format == "json" ? mtk::TableFormat::Json
                     : format == "csv" ? mtk::TableFormat::Csv
                                       : mtk::TableFormat::Text;
      if (output.empty()) {
        mtk::table_emit(std::cout, max_weight, f, divergent, lab);
      } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        mtk::table_emit(out, max_weight, f, divergent, lab);
      }
    } else if (*rel_cmd) {
      const auto k = mtk::relation_kernel(weight, lab);
      if (json) {
        mtk::Json rels = mtk::Json::array();
        for (const auto& r : k.relations) rels.push_back(mtk::to_json(r));
        std::cout << mtk::Json{{"weight", weight},
                               {"sequences", k.sequences.size()},
                               {"kernel_dimension", k.dimension()},
                               {"relations", rels}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "weight " << weight << ": " << k.sequences.size() << " convergent multitangents, "
                  << k.dimension() << " independent relations, span dimension " << k.span_dimension() << "\n";
        for (const auto& r : k.relations) std::cout << r.str() << " = 0\n";
      }
    } else if (*dims_cmd) {
      std::cout << "weight,count,kernel_dim,span_dim,conjectural\n";
      for (const auto& r : mtk::dimension_report(max_weight, lab)) {
        std::cout << r.weight << ',' << r.count << ',' << r.kernel_dim << ',' << r.span_dim << ',' << r.conjectural
                  << "\n";
      }
    } else if (*rank_cmd) {
      const auto m = mtk::rank_matrix(weight, convergent_rows ? mtk::RankRows::Convergent : mtk::RankRows::UnitFree,
                                      lab);
      std::cout << "rows:";
      for (const auto& r : m.rows) std::cout << " (" << r.str() << ")";
      std::cout << "\ncolumns:";
      for (const auto& c : m.columns) std::cout << ' ' << c.str() << "·Te^2";
      std::cout << "\n" << m.entries.str() << "rank " << m.rank << " of " << m.columns.size()
                << (m.conjectural_basis ? " (basis independence is conjectural)" : "") << "\n";
    } else if (*proj_cmd) {
      print_combo(mtk::projection(mtk::Composition::parse(seq), lab), json);
    } else if (*clean_cmd) {
      print_combo(mtk::unit_cleanse(mtk::Composition::parse(seq), lab), json);
    } else if (*four_cmd) {
      const auto s = mtk::Composition::parse(seq);
      std::cout << "n,re,im,abs_err\n";
      for (long n = 1; n <= n_max; ++n) {
        const auto c = mtk::fourier_coefficient(s, n, nctx);
        std::cout << n << ',' << fmt(c.value.real()) << ',' << fmt(c.value.imag()) << ',' << fmt(c.abs_err) << "\n";
      }
      if (!zf.empty()) {
        const mtk::Complex z = parse_complex(zf);
        const auto partial = mtk::fourier_partial_sum(s, z, n_max, nctx);
        const auto ref = mtk::combo_eval(mtk::MtCombo(s, 1), z, nctx);
        std::cout << "partial_sum," << fmt(partial.real()) << ',' << fmt(partial.imag()) << "\n"
                  << "value," << fmt(ref.value.real()) << ',' << fmt(ref.value.imag()) << "\n"
                  << "difference," << fmt(std::abs(partial - ref.value)) << "\n"
                  << "tail_bound," << fmt(mtk::fourier_tail_bound(s, z.imag(), n_max, nctx)) << "\n";
      }
    } else if (*ver_cmd) {
      mtk::SuiteOptions o;
      o.numeric = nctx.with_target(std::max(nctx.target_abs_error, 1e-10));
      o.samples = samples;
      o.seed = seed;
      if (ver_cmd->count("--max-weight") > 0) o.max_weight = max_weight;
      const auto rep = mtk::run_suite(mtk::parse_suite(suite), o);
      std::cout << suite << ": " << rep.checks << " checks, " << rep.failures.size() << " failures, max deviation "
                << rep.max_deviation << "\n";
      for (const auto& f : rep.failures) {
        std::cout << "  FAIL " << f.identity << " at " << f.z.real() << (f.z.imag() < 0 ? "" : "+") << f.z.imag()
                  << "i: " << f.deviation << "\n";
      }
      return rep.ok() ? 0 : kExitRecheck;
    }
  } catch (const mtk::CoverageError& e) {
    std::cerr << "mtk: coverage error: " << e.what() << "\n";
    return kExitCoverage;
  } catch (const mtk::IntegrityError& e) {
    std::cerr << "mtk: numeric recheck failed: " << e.what() << "\n";
    return kExitRecheck;
  } catch (const std::exception& e) {
    std::cerr << "mtk: " << e.what() << "\n";
    return kExitOther;
  }
  return 0;
}
