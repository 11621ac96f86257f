#include "trigweyl/metric.hpp"

#include <cmath>
#include <numbers>

#include "trigweyl/error.hpp"
#include "trigweyl/parallel.hpp"
#include "trigweyl/poly_text.hpp"

namespace trigweyl {

InvariantCombo metric_entry_by_fusion(const OrbitTable& table, FusionTable& fusions, const OrbitLabel& m,
                                      const OrbitLabel& n) {
  InvariantCombo out;
  for (const auto& [k, c] : fusions.get(m, n).terms) {
    out.add(k, Rational(-1, 2) * (k.norm - m.norm - n.norm) * c);
  }
  (void)table;
  return out;
}

InvariantCombo metric_entry_by_pairing(const OrbitTable& table, const OrbitLabel& m, const OrbitLabel& n) {
  const Orbit& a = table.at(m);
  const Orbit& b = table.at(n);
  ExpSum::Map acc;
  for (const auto& beta : a.elements) {
    for (const auto& gamma : b.elements) {
      const std::int64_t ip = inner_scaled(beta, gamma);
      if (ip == 0) continue;
      acc[beta + gamma] -= make_rational(ip, kScale * kScale);
    }
  }
  ExpSum s(table.root_system().rank());
  for (const auto& [f, c] : acc) s.add(f, c);
  return decompose(s, table);
}

Poly to_poly(const InvariantCombo& combo, const BasisResult& basis) {
  Poly out(basis.nvars());
  for (const auto& [label, c] : combo.terms) out += express(label, basis) * c;
  return out;
}

InverseMetric inverse_metric(const BasisResult& basis, const OrbitTable& table, FusionTable& fusions,
                             unsigned threads) {
  const std::size_t k = basis.nvars();
  InverseMetric im;
  im.basis = basis.basis;
  im.orbit_form.assign(k, std::vector<InvariantCombo>(k));
  im.poly_form.assign(k, std::vector<Poly>(k, Poly(k)));

  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) entries.emplace_back(i, j);
  }
  parallel_for(entries.size(), threads, [&](std::size_t e) {
    const auto [i, j] = entries[e];
    const OrbitLabel& m = basis.basis[i];
    const OrbitLabel& n = basis.basis[j];
    InvariantCombo by_fusion = metric_entry_by_fusion(table, fusions, m, n);
    if (by_fusion != metric_entry_by_pairing(table, m, n)) {
      throw Error(ErrorCode::CrossCheckMismatch, "metric entry (" + m.to_string() + ", " + n.to_string() +
                                                     "): fusion formula and pairing disagree");
    }
    Poly p = to_poly(by_fusion, basis);
    im.orbit_form[i][j] = by_fusion;
    im.orbit_form[j][i] = std::move(by_fusion);
    im.poly_form[i][j] = p;
    im.poly_form[j][i] = std::move(p);
  });
  return im;
}

Poly determinant(const Matrix<Poly>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  if (n == 1) return m[0][0];
  Poly det(m[0][0].nvars());
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    Matrix<Poly> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Poly term = m[0][col] * determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

ExpSum sin_product_expsum(const Orbit& root_orbit, const OrderingVector& xi) {
  const std::size_t dim = root_orbit.max_vector.dim();
  const Semiorbits halves = semiorbit_split(root_orbit, xi);
  ExpSum product = ExpSum::constant(dim, 1);
  for (const auto& alpha : halves.positive) {
    LatticeVector half(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (alpha[i] % 2 != 0) throw Error(ErrorCode::NotInLattice, "half of " + to_text(alpha) + " off grid");
      half[i] = alpha[i] / 2;
    }
    // 2i sin(theta/2) = e^{i theta/2} - e^{-i theta/2}; its square is -4 sin^2.
    ExpSum diff(dim);
    diff.add(half, 1);
    diff.add(-half, -1);
    product = multiply(product, multiply(diff, diff));
  }
  // prod sin^2 = (-1/4)^p prod (diff^2), so -4^p prod sin^2 = -(-1)^p prod (diff^2).
  const std::size_t p = halves.positive.size();
  product *= Rational(p % 2 == 0 ? -1 : 1);
  return product;
}

InvariantCombo sin_product_combo(const OrbitLabel& root_orbit, const OrbitTable& table) {
  return decompose(sin_product_expsum(table.at(root_orbit), table.xi()), table);
}

Poly sin_product_poly(const OrbitLabel& root_orbit, const BasisResult& basis, const OrbitTable& table) {
  return to_poly(sin_product_combo(root_orbit, table), basis);
}

FactorizationResult factorize(const InverseMetric& im, const BasisResult& basis, const OrbitTable& table,
                              unsigned threads) {
  FactorizationResult out;
  const RootSystem& rs = table.root_system();
  for (const auto& seed : rs.root_orbit_seeds()) out.root_orbits.push_back(table[table.require_index_of(seed)].label);
  out.P.assign(out.root_orbits.size(), Poly(basis.nvars()));
  parallel_for(out.root_orbits.size() + 1, threads, [&](std::size_t i) {
    if (i == out.root_orbits.size()) {
      out.det = determinant(im.poly_form);
    } else {
      out.P[i] = sin_product_poly(out.root_orbits[i], basis, table);
    }
  });

  Poly product = Poly::constant(basis.nvars(), 1);
  for (const auto& p : out.P) product = product * p;
  const Poly quotient = exact_divide(out.det, product, TermOrder::graded(basis.nvars()));
  if (quotient.size() != 1 || quotient.terms().begin()->first != Monomial{}) {
    throw Error(ErrorCode::CrossCheckMismatch, "det / prod P is not a constant");
  }
  out.constant = quotient.terms().begin()->second;
  return out;
}

TermOrder asymptotic_order(const BasisResult& basis, const OrbitTable& table) {
  std::vector<std::int64_t> w;
  for (const auto& b : basis.basis) w.push_back(height(table.at(b).max_vector, table.xi()));
  return TermOrder(std::move(w));
}

AsymptoticLead asymptotic_report(const Poly& p, const BasisResult& basis, const OrbitTable& table) {
  const TermOrder order = asymptotic_order(basis, table);
  const auto [m, c] = leading_term(p, order);
  const std::int64_t top = order.weight(m);
  for (const auto& [other, unused] : p.terms()) {
    if (other != m && order.weight(other) == top) {
      throw Error(ErrorCode::TieInLeadingWeight,
                  monomial_text(m, p.nvars(), basis.variable_names()) + " and " +
                      monomial_text(other, p.nvars(), basis.variable_names()));
    }
  }
  AsymptoticLead lead{m, c, LatticeVector(table.root_system().rank())};
  for (std::size_t i = 0; i < basis.nvars(); ++i) {
    lead.frequency += table.at(basis.basis[i]).max_vector * m[i];
  }
  return lead;
}

long double phase(const LatticeVector& v, std::span<const long double> x) {
  long double s = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) s += static_cast<long double>(v[i]) * x[i];
  return s / kScale;
}

std::vector<WallHit> wall_check(const RootSystem& rs, std::span<const long double> x, long double tolerance) {
  constexpr long double kTwoPi = 2 * std::numbers::pi_v<long double>;
  std::vector<WallHit> hits;
  for (const auto& alpha : rs.roots()) {
    const long double t = phase(alpha, x);
    const long double n = std::round(t / kTwoPi);
    if (std::fabs(t - kTwoPi * n) < tolerance) hits.push_back({alpha, static_cast<long>(n)});
  }
  return hits;
}

std::vector<long double> basis_values(const BasisResult& basis, const OrbitTable& table,
                                      std::span<const long double> x) {
  std::vector<long double> out;
  for (const auto& b : basis.basis) {
    long double s = 0;
    for (const auto& beta : table.at(b).elements) s += std::cos(phase(beta, x));
    out.push_back(s);
  }
  return out;
}

long double jacobian_det(const BasisResult& basis, const OrbitTable& table, std::span<const long double> x) {
  const std::size_t k = basis.nvars();
  const std::size_t n = table.root_system().rank();
  std::vector<std::vector<long double>> j(k, std::vector<long double>(n, 0));
  for (std::size_t m = 0; m < k; ++m) {
    for (const auto& beta : table.at(basis.basis[m]).elements) {
      const long double s = std::sin(phase(beta, x));
      for (std::size_t i = 0; i < n; ++i) j[m][i] -= static_cast<long double>(beta[i]) / kScale * s;
    }
  }
  if (k != n) throw Error(ErrorCode::DimensionMismatch, "Jacobian is not square");
  // Gaussian elimination with partial pivoting.
  long double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::fabs(j[r][c]) > std::fabs(j[piv][c])) piv = r;
    }
    if (j[piv][c] == 0) return 0;
    if (piv != c) {
      std::swap(j[piv], j[c]);
      det = -det;
    }
    det *= j[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const long double f = j[r][c] / j[c][c];
      for (std::size_t cc = c; cc < n; ++cc) j[r][cc] -= f * j[c][cc];
    }
  }
  return det;
}

long double sin_product_value(const Orbit& root_orbit, const OrderingVector& xi, std::span<const long double> x) {
  const Semiorbits halves = semiorbit_split(root_orbit, xi);
  long double prod = -1;
  for (const auto& alpha : halves.positive) {
    const long double s = std::sin(phase(alpha, x) / 2);
    prod *= 4 * s * s;
  }
  return prod;
}

long double inverse_sin_sum(const Orbit& root_orbit, const OrderingVector& xi, std::span<const long double> x) {
  const Semiorbits halves = semiorbit_split(root_orbit, xi);
  long double sum = 0;
  for (const auto& alpha : halves.positive) {
    const long double s = std::sin(phase(alpha, x) / 2);
    sum += 1 / (s * s);
  }
  return sum;
}

}  // namespace trigweyl
