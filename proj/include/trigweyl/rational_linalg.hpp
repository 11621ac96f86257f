#pragma once

#include <optional>
#include <vector>

#include "trigweyl/rational.hpp"

namespace trigweyl {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix transpose(const RationalMatrix& a);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalVector multiply(const RationalMatrix& a, const RationalVector& v);

/// Coefficients c_0..c_n of det(t I - A), monic (Faddeev-LeVerrier).
std::vector<Rational> characteristic_polynomial(const RationalMatrix& a);

Rational evaluate_univariate(const std::vector<Rational>& coefficients, const Rational& t);

/// Reduced row echelon form over the first `columns` columns, in place.
/// Returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a, std::size_t columns);

/// Basis of { v : A v = 0 }, each vector with its pivot-free entry set to 1.
std::vector<RationalVector> nullspace(const RationalMatrix& a);

/// Some solution of A v = b (free variables set to zero), or nullopt when
/// the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

/// True when all entries strictly above (upper) or below the diagonal vanish.
bool is_lower_triangular(const RationalMatrix& a);

/// Best rational approximation with denominator at most max_den (continued
/// fractions).
Rational rationalize(long double value, long max_den);

/// Numeric eigenvalues of a small dense matrix.
struct ComplexRoot {
  long double re = 0;
  long double im = 0;
};
std::vector<ComplexRoot> numeric_eigenvalues(const RationalMatrix& a);

}  // namespace trigweyl
