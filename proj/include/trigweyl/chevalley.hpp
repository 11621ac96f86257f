#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "trigweyl/expsum.hpp"
#include "trigweyl/polynomial.hpp"
#include "trigweyl/weyl_orbits.hpp"

namespace trigweyl {

/// Every orbit invariant of a table written as a polynomial in a few basis
/// invariants.
struct BasisResult {
  /// Basis orbits in processing order; variable i of every Poly is basis[i].
  std::vector<OrbitLabel> basis;
  std::map<OrbitLabel, Poly> expressions;
  /// The pair (m, n) whose product was inverted for each non-basis orbit.
  std::map<OrbitLabel, std::pair<OrbitLabel, OrbitLabel>> provenance;
  int max_norm = 0;

  std::size_t nvars() const noexcept { return basis.size(); }
  std::optional<std::size_t> variable_index(const OrbitLabel& label) const;
  std::vector<std::string> variable_names() const;
};

/// Inverts the fusion rules in increasing height of the maximal vectors. An
/// orbit whose maximal vector is not a sum of two earlier maximal vectors
/// becomes a basis variable.
BasisResult build_basis(const OrbitTable& table, FusionTable& fusions);

/// Throws UnknownOrbit.
const Poly& express(const OrbitLabel& orbit, const BasisResult& result);

/// Replaces basis variable `old_label` by `new_label`, whose expression must
/// be linear in the old variable with constant coefficient. All expressions
/// are rewritten by substitution.
BasisResult swap_basis_variable(const BasisResult& result, const OrbitLabel& old_label, const OrbitLabel& new_label);

/// Oracle: substitutes exp_sum_of(basis orbits) into the expression using
/// plain exponential-sum arithmetic and compares with exp_sum_of(orbit).
/// Cost grows quickly with the norm; intended for norms up to about 30.
bool verify_expression(const OrbitLabel& orbit, const Poly& expression, const BasisResult& result,
                       const OrbitTable& table);
bool verify_expression(const OrbitLabel& orbit, const BasisResult& result, const OrbitTable& table);

/// The same check on orbit coefficients only. Products of invariants are
/// invariant, so the coefficient of a product at each maximal vector
/// determines it: coef_g(A T_b) = sum over beta in Omega_b of A(g - beta).
/// Monomial values are memoized and shared between calls (thread safe).
class ReducedVerifier {
 public:
  ReducedVerifier(const OrbitTable& table, std::vector<OrbitLabel> basis);

  /// Orbit coefficients of a monomial in the basis invariants. Throws
  /// OrbitOutOfTable when its top frequency leaves the table.
  std::vector<Integer> monomial_value(const Monomial& m);
  std::vector<Rational> value(const Poly& p);
  bool verify(const OrbitLabel& orbit, const Poly& expression);

 private:
  const OrbitTable* table_;
  std::vector<OrbitLabel> basis_;
  std::vector<std::size_t> basis_index_;
  std::mutex mutex_;
  std::map<Monomial, std::vector<Integer>> memo_;
};

}  // namespace trigweyl
