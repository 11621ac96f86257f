#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "trigweyl/chevalley.hpp"
#include "trigweyl/expsum.hpp"
#include "trigweyl/polynomial.hpp"
#include "trigweyl/weyl_orbits.hpp"

namespace trigweyl {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// g^{mn} = sum_i dT_m/dx_i dT_n/dx_i for the basis invariants.
struct InverseMetric {
  std::vector<OrbitLabel> basis;
  Matrix<InvariantCombo> orbit_form;
  Matrix<Poly> poly_form;
};

/// Both constructions of every entry, (i) -1/2 sum_k (k - m - n) C^k_mn T_k
/// and (ii) the decomposed pairing -sum (beta, beta') e^{i(beta + beta')},
/// must agree (CrossCheckMismatch otherwise).
InverseMetric inverse_metric(const BasisResult& basis, const OrbitTable& table, FusionTable& fusions,
                             unsigned threads = 1);

InvariantCombo metric_entry_by_fusion(const OrbitTable& table, FusionTable& fusions, const OrbitLabel& m,
                                      const OrbitLabel& n);
InvariantCombo metric_entry_by_pairing(const OrbitTable& table, const OrbitLabel& m, const OrbitLabel& n);

/// Substitutes basis expressions for each invariant of the combination.
Poly to_poly(const InvariantCombo& combo, const BasisResult& basis);

/// Laplace expansion along the first row.
Poly determinant(const Matrix<Poly>& m);

/// -2^(2|Omega+|) prod over the positive semiorbit of sin^2((alpha, x)/2),
/// expanded with half frequencies and decomposed into invariants.
ExpSum sin_product_expsum(const Orbit& root_orbit, const OrderingVector& xi);
InvariantCombo sin_product_combo(const OrbitLabel& root_orbit, const OrbitTable& table);
Poly sin_product_poly(const OrbitLabel& root_orbit, const BasisResult& basis, const OrbitTable& table);

struct FactorizationResult {
  Poly det;
  /// One factor per root orbit, shortest roots first.
  std::vector<OrbitLabel> root_orbits;
  std::vector<Poly> P;
  /// det / prod P (CrossCheckMismatch unless this quotient is a constant).
  Rational constant;
};

FactorizationResult factorize(const InverseMetric& im, const BasisResult& basis, const OrbitTable& table,
                              unsigned threads = 1);

struct AsymptoticLead {
  Monomial monomial;
  Rational coefficient;
  /// sum_i n_i alpha_max(basis_i).
  LatticeVector frequency;
};

/// Leading monomial when every T_i grows like exp(height(alpha_max(basis_i))).
/// Throws ZeroPolynomial, TieInLeadingWeight.
AsymptoticLead asymptotic_report(const Poly& p, const BasisResult& basis, const OrbitTable& table);

/// Order in which T_i carries weight height(alpha_max(basis_i)).
TermOrder asymptotic_order(const BasisResult& basis, const OrbitTable& table);

// Numeric evaluation, x in lattice units.

struct WallHit {
  LatticeVector root;
  long n = 0;
};

/// Roots with (alpha, x) within `tolerance` of 2 pi n.
std::vector<WallHit> wall_check(const RootSystem& rs, std::span<const long double> x, long double tolerance = 1e-9L);

/// T_b(x) for every basis orbit (real, since orbits are symmetric).
std::vector<long double> basis_values(const BasisResult& basis, const OrbitTable& table,
                                      std::span<const long double> x);

/// det of dT_b/dx_i.
long double jacobian_det(const BasisResult& basis, const OrbitTable& table, std::span<const long double> x);

/// -2^(2|Omega+|) prod sin^2((alpha, x)/2) evaluated directly.
long double sin_product_value(const Orbit& root_orbit, const OrderingVector& xi, std::span<const long double> x);

/// sum over the positive semiorbit of 1 / sin^2((alpha, x)/2).
long double inverse_sin_sum(const Orbit& root_orbit, const OrderingVector& xi, std::span<const long double> x);

long double phase(const LatticeVector& v, std::span<const long double> x);

}  // namespace trigweyl
