#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trigweyl/lattice.hpp"
#include "trigweyl/weyl_orbits.hpp"

namespace trigweyl {

/// Finite sum  sum_beta c_beta exp(i (beta, x))  with rational coefficients.
/// Zero coefficients are never stored.
class ExpSum {
 public:
  using Map = std::unordered_map<LatticeVector, Rational, LatticeVectorHash>;

  ExpSum() = default;
  explicit ExpSum(std::size_t dim) : dim_(dim) {}
  static ExpSum constant(std::size_t dim, const Rational& c);
  static ExpSum term(const LatticeVector& freq, const Rational& c = 1);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const Map& terms() const noexcept { return terms_; }

  Rational coefficient(const LatticeVector& freq) const;
  void add(const LatticeVector& freq, const Rational& c);

  ExpSum& operator+=(const ExpSum& o);
  ExpSum& operator-=(const ExpSum& o);
  ExpSum& operator*=(const Rational& c);
  friend ExpSum operator+(ExpSum a, const ExpSum& b) { return a += b; }
  friend ExpSum operator-(ExpSum a, const ExpSum& b) { return a -= b; }
  friend ExpSum operator*(ExpSum a, const Rational& c) { return a *= c; }
  friend bool operator==(const ExpSum& a, const ExpSum& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  /// Terms ordered by decreasing height (canonical serialization order).
  std::vector<std::pair<LatticeVector, Rational>> sorted_terms(const OrderingVector& xi) const;

  /// Largest norm among the stored frequencies (0 when empty).
  Rational max_norm() const;

  /// Coefficients constant on every orbit of the table.
  bool is_invariant(const OrbitTable& table) const;

 private:
  std::size_t dim_ = 0;
  Map terms_;
};

/// Finite combination of orbit invariants  sum_k c_k T_k  (T_0 = 1).
struct InvariantCombo {
  std::map<OrbitLabel, Rational> terms;

  Rational coefficient(const OrbitLabel& l) const;
  void add(const OrbitLabel& l, const Rational& c);
  friend bool operator==(const InvariantCombo&, const InvariantCombo&) = default;
};

/// T_orbit: coefficient one on every element.
ExpSum exp_sum_of(const Orbit& orbit);

/// Convolution product.
ExpSum multiply(const ExpSum& a, const ExpSum& b);

/// Unique combination of orbit invariants equal to `s`. Throws NotInvariant,
/// OrbitOutOfTable (carrying the needed norm) or HeightCollision.
InvariantCombo decompose(const ExpSum& s, const OrbitTable& table);

/// Inverse of decompose.
ExpSum expand(const InvariantCombo& combo, const OrbitTable& table);

/// Fusion coefficients of T_m T_n by counting, for every orbit k of the
/// table, the pairs (beta, beta') in Omega_m x Omega_n summing to the maximal
/// vector of Omega_k. The total count is cross-checked against
/// #Omega_m * #Omega_n.
InvariantCombo fusion(const OrbitTable& table, const OrbitLabel& m, const OrbitLabel& n);

/// The same coefficients through decompose(multiply(T_m, T_n)).
InvariantCombo fusion_by_expansion(const OrbitTable& table, const OrbitLabel& m, const OrbitLabel& n);

/// Memoized fusion products, symmetric in the label pair. Safe for
/// concurrent use.
class FusionTable {
 public:
  explicit FusionTable(const OrbitTable& table) : table_(&table) {}

  InvariantCombo get(const OrbitLabel& m, const OrbitLabel& n);
  void insert(const OrbitLabel& m, const OrbitLabel& n, InvariantCombo combo);
  std::map<std::pair<OrbitLabel, OrbitLabel>, InvariantCombo> snapshot() const;
  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
  }
  const OrbitTable& table() const noexcept { return *table_; }

 private:
  static std::pair<OrbitLabel, OrbitLabel> key(const OrbitLabel& m, const OrbitLabel& n) {
    return m <= n ? std::pair{m, n} : std::pair{n, m};
  }

  const OrbitTable* table_;
  mutable std::mutex mutex_;
  std::map<std::pair<OrbitLabel, OrbitLabel>, InvariantCombo> cache_;
};

/// Numeric value of the exponential sum at x (lattice units), e.g. for
/// checking product formulas. Works for double and long double.
template <class Real>
std::complex<Real> evaluate(const ExpSum& s, std::span<const Real> x) {
  std::complex<Real> acc{0, 0};
  for (const auto& [freq, c] : s.terms()) {
    Real phase = 0;
    for (std::size_t i = 0; i < freq.dim(); ++i) phase += static_cast<Real>(freq[i]) * x[i];
    phase /= static_cast<Real>(kScale);
    const Real coef = static_cast<Real>(c.get_d());
    acc += coef * std::complex<Real>(std::cos(phase), std::sin(phase));
  }
  return acc;
}

}  // namespace trigweyl
