#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trigweyl/chevalley.hpp"
#include "trigweyl/metric.hpp"
#include "trigweyl/sutherland.hpp"

namespace trigweyl {

/// Published F4 values shipped with the library (data/reference_tables.json,
/// embedded at build time).
struct ReferenceData {
  struct OrbitRow {
    OrbitLabel label;
    std::vector<LatticeVector> generators;
    std::size_t cardinal = 0;
  };
  struct TextRow {
    std::string key;
    std::string text;
    std::string flag;  // "typo" marks rows known to be misprinted
    std::string note;
  };
  std::vector<OrbitLabel> basis;
  std::vector<OrbitRow> orbits;
  std::vector<LatticeVector> basis_max_vectors;
  std::vector<TextRow> expressions;        // key: orbit label
  std::vector<TextRow> metric_orbit_form;  // key: "m,n" in basis labels
  std::vector<TextRow> metric_basis_form;
  Rational determinant_constant;
  std::vector<TextRow> root_factors;       // key: root orbit label
  std::vector<std::string> root_factor_leading;
  std::vector<std::pair<OrbitLabel, LatticeVector>> weyl_vectors;
  std::vector<std::pair<OrbitLabel, std::vector<std::string>>> r_coefficients;
  struct PotentialRow {
    OrbitLabel a, b;
    Rational rho, C;
  };
  std::vector<PotentialRow> potential;
  std::vector<std::int64_t> flag_weights;
};

const ReferenceData& reference_data();
ReferenceData parse_reference(std::string_view json_text);

/// One compared item: status is "match", "mismatch" or "flagged" (a known
/// misprint that disagrees with the computation).
struct DiffEntry {
  std::string item;
  std::string status;
  std::vector<std::string> details;
};

struct DiffReport {
  std::string section;
  std::vector<DiffEntry> entries;
  std::size_t count(const std::string& status) const;
  /// No entry is a plain mismatch.
  bool clean() const { return count("mismatch") == 0; }
};

/// Term-by-term comparison of a computed polynomial with printed text.
/// Repeated monomials in the printed text are reported individually.
DiffEntry diff_poly(const std::string& item, const Poly& computed, const std::string& printed,
                    const std::vector<OrbitLabel>& variables, const std::vector<std::string>& names);
DiffEntry diff_combo(const std::string& item, const InvariantCombo& computed, const std::string& printed);

DiffReport diff_orbits(const OrbitTable& table, const ReferenceData& ref);
DiffReport diff_expressions(const BasisResult& basis, const ReferenceData& ref);
DiffReport diff_metric(const InverseMetric& im, const ReferenceData& ref);
DiffReport diff_factors(const FactorizationResult& f, const BasisResult& basis, const ReferenceData& ref);
DiffReport diff_r(const RCoefficients& r, const BasisResult& basis, const ReferenceData& ref);
DiffReport diff_potential(const PotentialData& pd, const ReferenceData& ref);

std::string to_text(const DiffReport& report);

}  // namespace trigweyl
