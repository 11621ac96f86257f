#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "trigweyl/chevalley.hpp"
#include "trigweyl/metric.hpp"
#include "trigweyl/polynomial.hpp"
#include "trigweyl/rational_linalg.hpp"

namespace trigweyl {

/// r^{(a)}_m = sum_n g^{mn} dP_a/dT_n / P_a, one vector per root orbit.
struct RCoefficients {
  std::vector<OrbitLabel> root_orbits;
  std::vector<std::vector<Poly>> r;
};

/// Throws NotDivisible if some numerator is not a multiple of P_a.
RCoefficients r_coefficients(const InverseMetric& im, const FactorizationResult& f);

/// D = -sum_{m,n} d_m g^{mn} d_n + sum_m (sum_a gamma_a r^{(a)}_m) d_m, with
/// d_m acting on everything to its right.
struct OperatorSpec {
  Matrix<Poly> second_order;
  std::vector<Poly> first_order;
  std::vector<Rational> gamma;
  /// Display names of the variables, used in diagnostics.
  std::vector<std::string> names;
};

OperatorSpec make_operator(const InverseMetric& im, const RCoefficients& r, const std::vector<Rational>& gamma);

Poly apply_D(const OperatorSpec& op, const Poly& p);

/// Monomials of weight <= N, ordered by weight, then by exponents.
class FlagSpace {
 public:
  FlagSpace(std::vector<std::int64_t> weights, std::int64_t n);

  std::int64_t level() const noexcept { return n_; }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::size_t dim() const noexcept { return monomials_.size(); }
  std::int64_t weight(const Monomial& m) const;
  std::optional<std::size_t> index(const Monomial& m) const;

 private:
  std::vector<std::int64_t> weights_;
  std::int64_t n_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

/// Weights n_1 + 2 n_2 + 3 n_3 + 4 n_6, i.e. 1..k in basis order.
std::vector<std::int64_t> graded_flag_weights(const BasisResult& basis);

/// Weights (alpha_max(b_i), omega) with omega the maximal vector of the
/// shortest root orbit, divided by their gcd; (2, 2, 3, 4) for F4. These
/// pair each monomial's leading frequency with a dominant vector, which is
/// what makes the spaces invariant.
std::vector<std::int64_t> chamber_flag_weights(const BasisResult& basis, const OrbitTable& table);

/// Row j holds the coordinates of D(m_j). Throws FlagViolation naming the
/// first image monomial outside the space.
RationalMatrix flag_matrix(const OperatorSpec& op, const FlagSpace& space, unsigned threads = 1);

struct EigenPair {
  /// Set when the eigenvalue is rational (always verified exactly).
  std::optional<Rational> exact;
  long double approx = 0;
  long double approx_imag = 0;
  /// Characteristic polynomial of the weight block it came from, emitted for
  /// eigenvalues that were not read off a triangular block.
  std::vector<Rational> charpoly;
  std::int64_t block_weight = 0;
  std::optional<Poly> eigenfunction;
  std::string note;
};

/// Eigenvalues from the weight-diagonal blocks, eigenfunctions by solving
/// the top block and back-substituting through lower weights. `order` picks
/// the monomial order in which blocks are tested for triangularity.
std::vector<EigenPair> spectrum(const OperatorSpec& op, const FlagSpace& space, const TermOrder& order,
                                unsigned threads = 1);

/// Quotient num / den kept exact; den is the constant 1 when the division
/// is exact.
struct RationalFunction {
  Poly num;
  Poly den;
};

struct PotentialData {
  std::vector<OrbitLabel> root_orbits;
  /// R_ab = sum_n r^{(a)}_n dP_b/dT_n / P_b.
  Matrix<RationalFunction> R;
  Matrix<Rational> rho;
  Matrix<Rational> C;
  Matrix<long double> residual;
  std::size_t samples = 0;
};

/// Sample points x = 2 pi u with u uniform in (0, 1)^n from a seeded
/// generator, rejecting any point with |sin((alpha, x)/2)| < 1e-3.
std::vector<std::vector<long double>> sample_points(const RootSystem& rs, std::size_t count, std::uint64_t seed);

/// Fits R_ab(T(x)) = rho_ab sum_{Omega_a+} sin^-2((alpha, x)/2) + C_ab by
/// least squares; rho and C are rationalized and the fit residual must stay
/// below 1e-8 (FitResidualTooLarge).
PotentialData potential_data(const FactorizationResult& f, const RCoefficients& r, const BasisResult& basis,
                             const OrbitTable& table, std::uint64_t seed, std::size_t samples = 12);

/// 1/4 sum_ab (gamma_a gamma_b - 1/4) R_ab from the fitted closed form.
/// Throws OnWall, and CrossCheckMismatch when the closed form and the
/// polynomial form of R differ by more than 1e-8 relative.
long double potential_W(std::span<const long double> x, const std::vector<Rational>& gamma, const PotentialData& pd,
                        const BasisResult& basis, const OrbitTable& table);

/// R_ab(T(x)) evaluated through the basis invariants in extended precision.
long double evaluate_R(const RationalFunction& R, const BasisResult& basis, const OrbitTable& table,
                       std::span<const long double> x);

}  // namespace trigweyl
