#pragma once

// Table of multizeta values written in a declared basis of products of
// convergent symbols, per weight.

#include <map>
#include <string>
#include <vector>

#include "mtk/mzv_algebra.hpp"
#include "mtk/numeric_context.hpp"

namespace mtk {

/// Rational combination of basis monomials.
using BasisForm = std::map<MzvMonomial, Rational>;

class MzvBasisTable {
 public:
  struct Entry {
    BasisForm value;
    std::string provenance;
  };

  /// Reads the JSON table; with verify set, every entry is checked against
  /// the nested-sum value to 1e-10 and IntegrityError is thrown on failure.
  static MzvBasisTable load(const std::string& path, bool verify = true, const NumericContext& ctx = {});
  static MzvBasisTable from_json_text(const std::string& text, bool verify = true, const NumericContext& ctx = {});

  /// The bundled table, loaded and verified once per process.
  static const MzvBasisTable& default_table();
  /// Path used by default_table(); must be called before its first use.
  static void set_default_path(const std::string& path);
  static std::string default_path();

  [[nodiscard]] int max_weight() const { return max_weight_; }
  [[nodiscard]] bool covers(int weight) const { return weight >= 0 && weight <= max_weight_; }
  /// Basis monomials of the given weight; {1} at weight 0.
  [[nodiscard]] const std::vector<MzvMonomial>& basis(int weight) const;
  /// Throws CoverageError for a word beyond the table.
  [[nodiscard]] const Entry& entry(const Composition& word) const;
  [[nodiscard]] const std::map<Composition, Entry>& entries() const { return entries_; }
  [[nodiscard]] const std::string& provenance() const { return provenance_; }

  /// Rewrites e in the basis: pi^(2m) becomes a multiple of Ze^(2m), products
  /// are linearized by stuffle and every word is replaced by its entry.
  [[nodiscard]] BasisForm normalize(const CoeffExpr& e) const;

  /// Largest |Ze^w - entry(w)| over all entries.
  [[nodiscard]] double verify(const NumericContext& ctx = {}) const;

 private:
  int max_weight_ = -1;
  std::string provenance_;
  std::map<int, std::vector<MzvMonomial>> basis_;
  std::map<Composition, Entry> entries_;
};

/// Numeric value of a basis form.
RealEstimate basis_form_value(const BasisForm& f, const NumericContext& ctx = {});

std::string basis_form_str(const BasisForm& f);

}  // namespace mtk
