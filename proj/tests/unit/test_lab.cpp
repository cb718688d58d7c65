#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "mtk/errors.hpp"
#include "mtk/lab.hpp"
#include "mtk/mzv_numeric.hpp"

using mtk::Composition;
using mtk::CompositionClass;
using mtk::MtCombo;
using mtk::Rational;

namespace {

MtCombo T(std::initializer_list<std::pair<Composition, Rational>> terms) {
  MtCombo c;
  for (const auto& [s, r] : terms) c.add(s, r);
  return c;
}

}  // namespace

TEST(Lab, EnumerationCounts) {
  for (int p = 2; p <= 12; ++p) {
    EXPECT_EQ(mtk::enumerate_compositions(p, CompositionClass::All).size(), std::size_t{1} << (p - 1));
    EXPECT_EQ(mtk::enumerate_compositions(p, CompositionClass::UnitFree).size(), mtk::fibonacci(p - 1)) << p;
    EXPECT_EQ(mtk::enumerate_compositions(p, CompositionClass::MzvConvergent).size(), std::size_t{1} << (p - 2));
    if (p >= 3) {
      EXPECT_EQ(mtk::enumerate_compositions(p, CompositionClass::Convergent).size(), std::size_t{1} << (p - 3))
          << p;
    }
  }
  EXPECT_EQ(mtk::enumerate_compositions(4, CompositionClass::UnitFree), (std::vector<Composition>{{4}, {2, 2}}));
  EXPECT_EQ(mtk::fibonacci(1), 1u);
  EXPECT_EQ(mtk::fibonacci(10), 55u);
}

TEST(Lab, ConjecturalDimensions) {
  const std::vector<std::uint64_t> d{1, 1, 2, 3, 4, 6, 8, 11, 15};
  for (int p = 2; p <= 10; ++p) EXPECT_EQ(mtk::conjectural_dimension(p), d[static_cast<std::size_t>(p - 2)]) << p;
}

TEST(Lab, CoordinatesOfSmallReductions) {
  EXPECT_EQ(mtk::coordinates_str(mtk::reduction_coordinates(Composition{2, 2})), "2·Ze[2]·Te^2");
  EXPECT_EQ(mtk::coordinates_str(mtk::reduction_coordinates(Composition{2, 1})), "0");
  EXPECT_EQ(mtk::coordinates_str(mtk::reduction_coordinates(Composition{2})), "Te^2");
}

TEST(Lab, RelationKernels) {
  const std::vector<std::size_t> dims{0, 0, 0, 1, 4, 10, 24};
  for (int p = 2; p <= 8; ++p) {
    const auto k = mtk::relation_kernel(p);
    EXPECT_EQ(k.dimension(), dims[static_cast<std::size_t>(p - 2)]) << p;
    EXPECT_EQ(k.span_dimension(), mtk::conjectural_dimension(p)) << p;
    for (const auto& r : k.relations) {
      EXPECT_TRUE(mtk::combo_coordinates(r).empty()) << r.str();
      EXPECT_TRUE(k.contains(r));
    }
  }
  const auto k5 = mtk::relation_kernel(5);
  EXPECT_TRUE(k5.contains(T({{{2, 1, 2}, 1}})));
  EXPECT_FALSE(k5.contains(T({{{5}, 1}})));
  const auto k6 = mtk::relation_kernel(6);
  EXPECT_TRUE(k6.contains(T({{{3, 1, 2}, 1}, {{2, 1, 3}, 1}, {{2, 1, 1, 2}, 1}})));
  EXPECT_TRUE(k6.contains(T({{{2, 2, 2}, 3}, {{3, 3}, 2}})));
  EXPECT_FALSE(k6.contains(T({{{2, 2, 2}, 1}})));
  EXPECT_TRUE(mtk::relation_kernel(7).contains(T({{{2, 1, 1, 1, 2}, 1}})));
}

TEST(Lab, KernelErrors) {
  EXPECT_THROW(mtk::relation_kernel(1), std::invalid_argument);
  mtk::LabContext capped;
  capped.weight_cap = 6;
  EXPECT_THROW(mtk::relation_kernel(7, capped), std::invalid_argument);
  mtk::LabContext wide;
  wide.weight_cap = 12;
  EXPECT_THROW(mtk::relation_kernel(11, wide), mtk::CoverageError);
  EXPECT_THROW(mtk::relation_kernel(11), std::invalid_argument);
}

TEST(Lab, Differentiation) {
  EXPECT_EQ(mtk::differentiate_combo(T({{{2}, 1}})), T({{{3}, -2}}));
  EXPECT_EQ(mtk::differentiate_combo(T({{{2, 2}, 1}})), T({{{3, 2}, -2}, {{2, 3}, -2}}));
  EXPECT_TRUE(mtk::differentiate_combo(MtCombo()).is_zero());
  EXPECT_EQ(mtk::differentiate_combo(T({{{3, 1}, 2}})), T({{{4, 1}, -6}, {{3, 2}, -2}}));
}

TEST(Lab, Projections) {
  EXPECT_EQ(mtk::projection(Composition{2}), T({{{2, 2}, Rational(1, 2)}}));
  EXPECT_EQ(mtk::projection(Composition{3}), T({{{2, 3}, Rational(-1, 6)}, {{3, 2}, Rational(1, 6)}}));
  EXPECT_EQ(mtk::projection(Composition{5}), T({{{2, 5}, Rational(1, 30)},
                                                 {{3, 4}, Rational(1, 15)},
                                                 {{4, 3}, Rational(-1, 15)},
                                                 {{5, 2}, Rational(-1, 30)}}));
  for (const auto& sigma : {Composition{4}, Composition{2, 2}, Composition{6}, Composition{3, 3}, Composition{5, 3}}) {
    const auto pr = mtk::projection(sigma);
    const auto w = sigma.weight() + 2;
    ASSERT_EQ(pr.weight(), w);
    for (const auto& [s, c] : pr.terms()) EXPECT_TRUE(mtk::is_unit_free(s)) << s;
    // Ze^sigma Te^2 - projection vanishes at sample points
    const double zs = mtk::ze_numeric(sigma).value;
    for (const auto& z : mtk::recheck_points(11, 3)) {
      const auto lhs = zs * mtk::combo_eval(T({{{2}, 1}}), z).value;
      EXPECT_LT(std::abs(lhs - mtk::combo_eval(pr, z).value), 1e-9 * std::max(1.0, std::abs(lhs))) << sigma;
    }
    // the derivative is then -2 Ze^sigma Te^3
    const auto d = mtk::differentiate_combo(pr);
    for (const auto& z : mtk::recheck_points(12, 2)) {
      const auto lhs = -2 * zs * mtk::combo_eval(T({{{3}, 1}}), z).value;
      EXPECT_LT(std::abs(lhs - mtk::combo_eval(d, z).value), 1e-9 * std::max(1.0, std::abs(lhs))) << sigma;
    }
  }
  EXPECT_THROW(mtk::projection(Composition{1, 2}), std::invalid_argument);
  EXPECT_THROW(mtk::projection(Composition{}), std::invalid_argument);
}

TEST(Lab, UnitCleansing) {
  EXPECT_EQ(mtk::unit_cleanse(Composition{2, 1, 3}),
            T({{{2, 4}, Rational(-1, 4)}, {{3, 3}, Rational(1, 6)}, {{4, 2}, Rational(1, 4)}}));
  EXPECT_TRUE(mtk::unit_cleanse(Composition{1, 2}).is_zero());
  EXPECT_EQ(mtk::unit_cleanse(Composition{2, 3}), T({{{2, 3}, 1}}));
  EXPECT_THROW(mtk::unit_cleanse(Composition{1, 1}), mtk::ProjectionNotFound);
  const Composition s{3, 1, 1, 2};
  const auto c = mtk::unit_cleanse(s);
  for (const auto& [w, r] : c.terms()) EXPECT_TRUE(mtk::is_unit_free(w));
  for (const auto& z : mtk::recheck_points(13, 3)) {
    const auto lhs = mtk::combo_eval(T({{s, 1}}), z).value;
    EXPECT_LT(std::abs(lhs - mtk::combo_eval(c, z).value), 1e-9);
  }
}

TEST(Lab, RankMatrices) {
  const std::vector<std::size_t> ranks{1, 2, 2, 3};
  const std::vector<std::size_t> unit_rows{4, 7, 12, 20};
  const std::vector<std::size_t> conv_rows{7, 15, 31, 63};
  for (int p = 4; p <= 7; ++p) {
    const auto i = static_cast<std::size_t>(p - 4);
    const auto u = mtk::rank_matrix(p, mtk::RankRows::UnitFree);
    const auto c = mtk::rank_matrix(p, mtk::RankRows::Convergent);
    EXPECT_EQ(u.rank, ranks[i]) << p;
    EXPECT_EQ(c.rank, ranks[i]) << p;
    EXPECT_EQ(u.rows.size(), unit_rows[i]);
    EXPECT_EQ(u.rows.size(), mtk::fibonacci(p + 1) - 1);
    EXPECT_EQ(c.rows.size(), conv_rows[i]);
    EXPECT_EQ(u.columns.size(), ranks[i]);
    EXPECT_EQ(u.columns, mtk::MzvBasisTable::default_table().basis(p));
    EXPECT_EQ(u.conjectural_basis, u.columns.size() > 1);
  }
  const auto m = mtk::rank_matrix(4, mtk::RankRows::Convergent);
  const std::vector<std::pair<Composition, int>> expected{{{2, 4}, 4},     {{3, 3}, -6},    {{4, 2}, 4},
                                                          {{2, 2, 2}, 4},  {{2, 1, 3}, -1}, {{3, 1, 2}, -1},
                                                          {{2, 1, 1, 2}, 2}};
  ASSERT_EQ(m.rows.size(), expected.size());
  for (const auto& [s, v] : expected) {
    const auto it = std::find(m.rows.begin(), m.rows.end(), s);
    ASSERT_NE(it, m.rows.end()) << s;
    EXPECT_EQ(m.entries(static_cast<std::size_t>(it - m.rows.begin()), 0), Rational(v)) << s;
  }
  EXPECT_THROW(mtk::rank_matrix(1), std::invalid_argument);
}

TEST(Lab, DimensionReport) {
  const auto rows = mtk::dimension_report(7);
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.span_dim, r.conjectural) << r.weight;
    EXPECT_EQ(r.count, r.kernel_dim + r.span_dim);
  }
}

TEST(Lab, TableEmit) {
  std::ostringstream text;
  mtk::table_emit(text, 4, mtk::TableFormat::Text, true);
  const auto t = text.str();
  EXPECT_NE(t.find("Te[2,2] = 2·Ze[2]·Te^2"), std::string::npos) << t;
  EXPECT_NE(t.find("Te[2,1] = 0"), std::string::npos) << t;
  EXPECT_NE(t.find("Te[2] = Te^2"), std::string::npos) << t;
  std::ostringstream csv;
  mtk::table_emit(csv, 3, mtk::TableFormat::Csv);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "sequence,class,k,coefficient,value");
  std::ostringstream json;
  mtk::table_emit(json, 5, mtk::TableFormat::Json);
  EXPECT_NE(json.str().find("\"max_weight\""), std::string::npos);
}
