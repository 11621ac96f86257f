#include "trigweyl/rational_linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "trigweyl/error.hpp"

namespace trigweyl {

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix transpose(const RationalMatrix& a) {
  if (a.empty()) return {};
  RationalMatrix t(a[0].size(), RationalVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size(), inner = b.size(), m = b.empty() ? 0 : b[0].size();
  RationalMatrix c(n, RationalVector(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != inner) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

RationalVector multiply(const RationalMatrix& a, const RationalVector& v) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  }
  return out;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, RationalVector(n));
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = multiply(a, m);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    m = std::move(next);
    const RationalMatrix am = multiply(a, m);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

Rational evaluate_univariate(const std::vector<Rational>& coefficients, const Rational& t) {
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<std::size_t> rref(RationalMatrix& a, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < a.size(); ++col) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
  if (a.empty()) return {};
  const std::size_t n = a[0].size();
  RationalMatrix r = a;
  const auto pivots = rref(r, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug, n);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i) {
    if (aug[i][n] != 0) return std::nullopt;
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

bool is_lower_triangular(const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a[i].size(); ++j) {
      if (a[i][j] != 0) return false;
    }
  }
  return true;
}

Rational rationalize(long double value, long max_den) {
  // Convergents h/k of the continued fraction of value.
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double x = value;
  for (int step = 0; step < 64; ++step) {
    const long double a = std::floor(x);
    const Integer ai(static_cast<double>(a));
    const Integer h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    const long double frac = x - a;
    if (std::fabs(frac) < 1e-15L) break;
    x = 1 / frac;
  }
  if (k1 == 0) return Rational(static_cast<double>(std::round(value)));
  Rational q(h1, k1);
  q.canonicalize();
  return q;
}

std::vector<ComplexRoot> numeric_eigenvalues(const RationalMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a[i][j].get_d();
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  std::vector<ComplexRoot> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back({solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag()});
  return out;
}

}  // namespace trigweyl
