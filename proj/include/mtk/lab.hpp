#pragma once

// Weight-graded linear algebra on multitangents: relation kernels,
// projection of Ze^sigma Te^2 onto multitangents, unit cleansing, the Te^2
// rank matrices and table output.

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mtk/basis_table.hpp"
#include "mtk/combo.hpp"
#include "mtk/linalg.hpp"
#include "mtk/numeric_context.hpp"
#include "mtk/numerics.hpp"

namespace mtk {

struct LabContext {
  NumericContext numeric;
  /// nullptr selects MzvBasisTable::default_table().
  const MzvBasisTable* table = nullptr;
  /// Seed of the sample points used by the numeric rechecks.
  std::uint64_t seed = 0x6d746b;
  double recheck_tolerance = 1e-7;
  int weight_cap = 10;

  [[nodiscard]] const MzvBasisTable& basis_table() const;
};

enum class CompositionClass {
  All,
  Convergent,     // S*_{b,e}: s_1 >= 2 and s_r >= 2
  MzvConvergent,  // S*_b: s_1 >= 2
  UnitFree,       // every part >= 2
};

/// Compositions of weight p in the class, in the Composition order.
std::vector<Composition> enumerate_compositions(int p, CompositionClass cls);

/// f_1 = f_2 = 1.
std::uint64_t fibonacci(int n);

/// Coordinates of a reduction: (monotangent order k, basis monomial) -> rational,
/// with k = 0 for the constant term.
using MonoKey = std::pair<int, MzvMonomial>;
using Coordinates = std::map<MonoKey, Rational>;

/// Reduction of Te^s written in the MZV basis; the Te^1 coefficient of a
/// convergent s is checked to vanish and dropped.
Coordinates reduction_coordinates(const Composition& s, const LabContext& ctx = {});
Coordinates combo_coordinates(const MtCombo& c, const LabContext& ctx = {});
std::string coordinates_str(const Coordinates& c);

/// Sum of c_s Te^s(z); convergent terms by direct summation, the others
/// through their reduction.
ComplexEstimate combo_eval(const MtCombo& c, Complex z, const NumericContext& ctx = {});

/// Sample points for the rechecks: Re z in [-1/2, 1/2], Im z in [0.4, 1.2].
std::vector<Complex> recheck_points(std::uint64_t seed, std::size_t count = 2);

struct RelationKernel {
  int weight = 0;
  std::vector<Composition> sequences;  // matrix columns
  std::vector<MonoKey> rows;           // matrix rows
  RationalMatrix matrix;
  std::vector<MtCombo> relations;      // kernel basis, each rechecked numerically

  [[nodiscard]] std::size_t dimension() const { return relations.size(); }
  [[nodiscard]] std::size_t span_dimension() const { return sequences.size() - relations.size(); }
  /// Is c (over the columns) a Q-linear combination of the relations?
  [[nodiscard]] bool contains(const MtCombo& c) const;
};

/// Q-linear relations among the convergent multitangents of weight p >= 2.
/// Throws CoverageError if the table misses weight p - 2 and IntegrityError
/// when a relation fails its numeric recheck.
RelationKernel relation_kernel(int p, const LabContext& ctx = {});

/// d/dz Te^s = -sum_i s_i Te^{s + e_i}, extended linearly.
MtCombo differentiate_combo(const MtCombo& c);

/// A combination of unit-free multitangents of weight ||sigma|| + 2 equal to
/// Ze^sigma Te^2. Columns follow the Composition order, pivots are leftmost
/// and free coefficients are zero. Throws ProjectionNotFound when the
/// system has no solution.
MtCombo projection(const Composition& sigma, const LabContext& ctx = {});

/// A combination of unit-free multitangents of weight ||s|| equal to Te^s,
/// with the same pivot rule as projection. Unit-free s return Te^s itself.
MtCombo unit_cleanse(const Composition& s, const LabContext& ctx = {});

enum class RankRows {
  UnitFree,    // length >= 2, every part >= 2: f_{p+1} - 1 rows
  Convergent,  // length >= 2 in S*_{b,e}
};

struct RankMatrix {
  int weight = 0;                   // p; the rows have weight p + 2
  std::vector<Composition> rows;
  std::vector<MzvMonomial> columns;  // weight-p basis, unknowns Ze^sigma Te^2
  RationalMatrix entries;
  std::size_t rank = 0;
  /// The rank is relative to a basis whose independence is conjectural.
  bool conjectural_basis = false;
};

RankMatrix rank_matrix(int p, RankRows rows = RankRows::UnitFree, const LabContext& ctx = {});

struct DimensionRow {
  int weight = 0;
  std::size_t count = 0;
  std::size_t kernel_dim = 0;
  std::size_t span_dim = 0;
  std::uint64_t conjectural = 0;
};

/// d(2..5) = 1, 1, 2, 3 and d(p) = d(p-1) + d(p-2) - d(p-4).
std::uint64_t conjectural_dimension(int p);

std::vector<DimensionRow> dimension_report(int p_max, const LabContext& ctx = {});

enum class TableFormat { Json, Csv, Text };

/// Reductions of every convergent s (and divergent s if requested) with
/// 2 <= ||s|| <= p_max, with coefficient values at 1e-9.
void table_emit(std::ostream& out, int p_max, TableFormat format, bool include_divergent = false,
                const LabContext& ctx = {});

}  // namespace mtk
