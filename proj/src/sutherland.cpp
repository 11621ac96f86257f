#include "trigweyl/sutherland.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>

#include "trigweyl/error.hpp"
#include "trigweyl/parallel.hpp"
#include "trigweyl/poly_text.hpp"

namespace trigweyl {

namespace {

using HighReal = boost::multiprecision::cpp_bin_float_50;

const std::vector<std::string>& generic_names() {
  static const std::vector<std::string> names = {"X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"};
  return names;
}

HighReal high_phase(const LatticeVector& v, std::span<const long double> x) {
  HighReal s = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) s += HighReal(v[i]) * HighReal(x[i]);
  return s / kScale;
}

std::vector<HighReal> high_basis_values(const BasisResult& basis, const OrbitTable& table,
                                        std::span<const long double> x) {
  std::vector<HighReal> out;
  for (const auto& b : basis.basis) {
    HighReal s = 0;
    for (const auto& beta : table.at(b).elements) s += cos(high_phase(beta, x));
    out.push_back(s);
  }
  return out;
}

HighReal high_inverse_sin_sum(const Orbit& root_orbit, const OrderingVector& xi, std::span<const long double> x) {
  HighReal sum = 0;
  for (const auto& alpha : semiorbit_split(root_orbit, xi).positive) {
    const HighReal s = sin(high_phase(alpha, x) / 2);
    sum += 1 / (s * s);
  }
  return sum;
}

HighReal to_high(const Rational& q) {
  return HighReal(q.get_num().get_str()) / HighReal(q.get_den().get_str());
}

HighReal high_evaluate(const RationalFunction& R, std::span<const HighReal> values) {
  return evaluate_numeric<HighReal>(R.num, values) / evaluate_numeric<HighReal>(R.den, values);
}

}  // namespace

RCoefficients r_coefficients(const InverseMetric& im, const FactorizationResult& f) {
  const std::size_t k = im.basis.size();
  const TermOrder order = TermOrder::graded(k);
  RCoefficients out;
  out.root_orbits = f.root_orbits;
  for (std::size_t a = 0; a < f.P.size(); ++a) {
    const Poly& P = f.P[a];
    std::vector<Poly> ra;
    for (std::size_t m = 0; m < k; ++m) {
      Poly num(k);
      for (std::size_t n = 0; n < k; ++n) num += im.poly_form[m][n] * partial(P, n);
      try {
        ra.push_back(exact_divide(num, P, order));
      } catch (const Error& e) {
        throw Error(ErrorCode::NotDivisible, "r(" + f.root_orbits[a].to_string() + ")_" + std::to_string(m + 1) +
                                                 ": " + e.what());
      }
    }
    out.r.push_back(std::move(ra));
  }
  return out;
}

OperatorSpec make_operator(const InverseMetric& im, const RCoefficients& r, const std::vector<Rational>& gamma) {
  if (gamma.size() != r.r.size()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(r.r.size()) + " couplings");
  }
  const std::size_t k = im.basis.size();
  OperatorSpec op;
  op.second_order = im.poly_form;
  op.gamma = gamma;
  op.names = variable_names(im.basis);
  op.first_order.assign(k, Poly(k));
  for (std::size_t a = 0; a < gamma.size(); ++a) {
    for (std::size_t m = 0; m < k; ++m) op.first_order[m] += r.r[a][m] * gamma[a];
  }
  return op;
}

Poly apply_D(const OperatorSpec& op, const Poly& p) {
  const std::size_t k = op.first_order.size();
  Poly out(p.nvars());
  for (std::size_t n = 0; n < k; ++n) {
    const Poly dn = partial(p, n);
    if (dn.is_zero()) continue;
    for (std::size_t m = 0; m < k; ++m) out -= partial(op.second_order[m][n] * dn, m);
    out += op.first_order[n] * dn;
  }
  return out;
}

FlagSpace::FlagSpace(std::vector<std::int64_t> weights, std::int64_t n) : weights_(std::move(weights)), n_(n) {
  for (auto w : weights_) {
    if (w <= 0) throw Error(ErrorCode::DimensionMismatch, "flag weights must be positive");
  }
  Monomial m{};
  std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t var, std::int64_t budget) {
    if (var == weights_.size()) {
      monomials_.push_back(m);
      return;
    }
    for (std::int64_t e = 0; e * weights_[var] <= budget; ++e) {
      m[var] = static_cast<std::uint16_t>(e);
      fill(var + 1, budget - e * weights_[var]);
    }
    m[var] = 0;
  };
  if (n_ >= 0) fill(0, n_);
  std::sort(monomials_.begin(), monomials_.end(), [&](const Monomial& a, const Monomial& b) {
    const auto wa = weight(a), wb = weight(b);
    return wa != wb ? wa < wb : a < b;
  });
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::int64_t FlagSpace::weight(const Monomial& m) const {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) w += weights_[i] * m[i];
  return w;
}

std::optional<std::size_t> FlagSpace::index(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::int64_t> graded_flag_weights(const BasisResult& basis) {
  std::vector<std::int64_t> w(basis.nvars());
  std::iota(w.begin(), w.end(), 1);
  return w;
}

std::vector<std::int64_t> chamber_flag_weights(const BasisResult& basis, const OrbitTable& table) {
  const RootSystem& rs = table.root_system();
  const LatticeVector omega = table[table.require_index_of(rs.root_orbit_seeds().front())].max_vector;
  std::vector<std::int64_t> w;
  std::int64_t g = 0;
  for (const auto& b : basis.basis) {
    w.push_back(inner_scaled(table.at(b).max_vector, omega));
    g = std::gcd(g, w.back());
  }
  for (auto& x : w) {
    if (x <= 0) throw Error(ErrorCode::InternalOrderingViolation, "nonpositive chamber weight");
    x /= g;
  }
  return w;
}

RationalMatrix flag_matrix(const OperatorSpec& op, const FlagSpace& space, unsigned threads) {
  const std::size_t dim = space.dim();
  const std::size_t k = op.first_order.size();
  RationalMatrix f(dim, RationalVector(dim));
  const auto& names = op.names.size() == k ? op.names : generic_names();
  std::vector<std::string> violation(dim);
  parallel_for(dim, threads, [&](std::size_t j) {
    const Poly image = apply_D(op, Poly::monomial(k, space.monomials()[j], 1));
    for (const auto& [m, c] : image.terms()) {
      auto i = space.index(m);
      if (!i) {
        violation[j] = "D(" + monomial_text(space.monomials()[j], k, names) + ") contains " +
                       c.get_str() + "*" + monomial_text(m, k, names) + " of weight " +
                       std::to_string(space.weight(m)) + " > " + std::to_string(space.level());
        return;
      }
      f[j][*i] = c;
    }
  });
  for (const auto& v : violation) {
    if (!v.empty()) throw Error(ErrorCode::FlagViolation, v);
  }
  return f;
}

std::vector<EigenPair> spectrum(const OperatorSpec& op, const FlagSpace& space, const TermOrder& order,
                                unsigned threads) {
  const RationalMatrix f = flag_matrix(op, space, threads);
  const std::size_t dim = space.dim();
  const std::size_t k = op.first_order.size();

  std::map<std::int64_t, std::vector<std::size_t>> blocks;
  for (std::size_t j = 0; j < dim; ++j) blocks[space.weight(space.monomials()[j])].push_back(j);
  for (auto& [w, idx] : blocks) {
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return order.greater(space.monomials()[b], space.monomials()[a]);
    });
  }

  // A_w acts on coefficient vectors of the block: (A v)_i = sum_j f[j][i] v_j.
  auto block_map = [&](const std::vector<std::size_t>& idx) {
    RationalMatrix a(idx.size(), RationalVector(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t c = 0; c < idx.size(); ++c) a[r][c] = f[idx[c]][idx[r]];
    }
    return a;
  };

  struct BlockEigen {
    std::int64_t weight;
    std::vector<std::pair<Rational, std::size_t>> exact;  // value, algebraic multiplicity
    std::vector<EigenPair> inexact;
    std::vector<Rational> charpoly;
    bool triangular;
  };
  std::vector<BlockEigen> per_block;
  for (const auto& [w, idx] : blocks) {
    BlockEigen be{w, {}, {}, {}, false};
    const RationalMatrix a = block_map(idx);
    be.triangular = is_lower_triangular(transpose(a));
    std::map<Rational, std::size_t> found;
    if (be.triangular) {
      for (std::size_t i = 0; i < idx.size(); ++i) ++found[a[i][i]];
    } else {
      be.charpoly = characteristic_polynomial(a);
      for (const auto& root : numeric_eigenvalues(a)) {
        const Rational guess = rationalize(root.re, 1000000);
        if (std::fabs(root.im) < 1e-9L && evaluate_univariate(be.charpoly, guess) == 0) {
          ++found[guess];
        } else {
          EigenPair ep;
          ep.approx = root.re;
          ep.approx_imag = root.im;
          ep.charpoly = be.charpoly;
          ep.block_weight = w;
          ep.note = "irrational eigenvalue; eigenfunction not computed";
          be.inexact.push_back(std::move(ep));
        }
      }
    }
    for (const auto& [value, mult] : found) be.exact.emplace_back(value, mult);
    per_block.push_back(std::move(be));
  }

  std::vector<EigenPair> out;
  std::size_t block_no = 0;
  for (const auto& [w, idx] : blocks) {
    const BlockEigen& be = per_block[block_no];
    for (const auto& [lambda, mult] : be.exact) {
      auto shifted = [&](const std::vector<std::size_t>& rows) {
        RationalMatrix a = block_map(rows);
        for (std::size_t i = 0; i < rows.size(); ++i) a[i][i] -= lambda;
        return a;
      };
      auto rhs_for = [&](const std::vector<std::size_t>& rows, const RationalVector& vec) {
        RationalVector rhs(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
          for (std::size_t j = 0; j < dim; ++j) {
            if (vec[j] != 0 && f[j][rows[i]] != 0) rhs[i] -= f[j][rows[i]] * vec[j];
          }
        }
        return rhs;
      };

      // Fast path: eigenvectors of the top block, back-solved block by block.
      std::vector<RationalVector> found;
      bool complete = true;
      for (const auto& vw : nullspace(shifted(idx))) {
        RationalVector v(dim);
        for (std::size_t i = 0; i < idx.size(); ++i) v[idx[i]] = vw[i];
        for (std::size_t lower = block_no; lower-- > 0 && complete;) {
          const auto& lidx = std::next(blocks.begin(), static_cast<long>(lower))->second;
          auto x = solve(shifted(lidx), rhs_for(lidx, v));
          if (!x) {
            complete = false;
            break;
          }
          for (std::size_t i = 0; i < lidx.size(); ++i) v[lidx[i]] = (*x)[i];
        }
        if (!complete) break;
        found.push_back(std::move(v));
      }

      // Slow path when lambda recurs in lower blocks: the eigenvectors owned
      // by this block are the kernel vectors of D - lambda on weights <= w
      // whose top-block components are independent.
      if (!complete) {
        found.clear();
        std::vector<std::size_t> cols(idx);
        for (auto it = blocks.begin(); it->first != w; ++it) cols.insert(cols.end(), it->second.begin(), it->second.end());
        RationalMatrix kernel = nullspace(shifted(cols));
        rref(kernel, cols.size());
        for (const auto& row : kernel) {
          std::size_t lead = 0;
          while (lead < cols.size() && row[lead] == 0) ++lead;
          if (lead >= idx.size()) continue;
          RationalVector v(dim);
          for (std::size_t i = 0; i < cols.size(); ++i) v[cols[i]] = row[i];
          found.push_back(std::move(v));
        }
      }

      for (const auto& v : found) {
        Poly p(k);
        for (std::size_t j = 0; j < dim; ++j) p.add_term(space.monomials()[j], v[j]);
        p *= 1 / leading_term(p, order).second;
        if (apply_D(op, p) != p * lambda) {
          throw Error(ErrorCode::CrossCheckMismatch, "eigen-residual nonzero for eigenvalue " + lambda.get_str());
        }
        EigenPair ep;
        ep.exact = lambda;
        ep.approx = static_cast<long double>(lambda.get_d());
        ep.block_weight = w;
        if (!be.triangular) ep.charpoly = be.charpoly;
        ep.eigenfunction = std::move(p);
        out.push_back(std::move(ep));
      }
      for (std::size_t missing = found.size(); missing < mult; ++missing) {
        EigenPair ep;
        ep.exact = lambda;
        ep.approx = static_cast<long double>(lambda.get_d());
        ep.block_weight = w;
        if (!be.triangular) ep.charpoly = be.charpoly;
        ep.note = "DefectiveBlock: geometric multiplicity below algebraic multiplicity; generalized eigenvector only";
        out.push_back(std::move(ep));
      }
    }
    for (const auto& ep : be.inexact) out.push_back(ep);
    ++block_no;
  }
  return out;
}

std::vector<std::vector<long double>> sample_points(const RootSystem& rs, std::size_t count, std::uint64_t seed) {
  constexpr long double kTwoPi = 2 * std::numbers::pi_v<long double>;
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<std::vector<long double>> out;
  while (out.size() < count) {
    std::vector<long double> x(rs.rank());
    for (auto& xi : x) xi = kTwoPi * static_cast<long double>(uniform(gen));
    bool ok = true;
    for (const auto& alpha : rs.roots()) {
      if (std::fabs(std::sin(phase(alpha, x) / 2)) < 1e-3L) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(x));
  }
  return out;
}

PotentialData potential_data(const FactorizationResult& f, const RCoefficients& r, const BasisResult& basis,
                             const OrbitTable& table, std::uint64_t seed, std::size_t samples) {
  const std::size_t k = basis.nvars();
  const std::size_t na = f.P.size();
  const TermOrder order = TermOrder::graded(k);
  PotentialData pd;
  pd.root_orbits = f.root_orbits;
  pd.samples = samples;
  pd.R.assign(na, std::vector<RationalFunction>(na));
  pd.rho.assign(na, std::vector<Rational>(na));
  pd.C.assign(na, std::vector<Rational>(na));
  pd.residual.assign(na, std::vector<long double>(na));
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < na; ++b) {
      Poly num(k);
      for (std::size_t n = 0; n < k; ++n) num += r.r[a][n] * partial(f.P[b], n);
      try {
        pd.R[a][b] = {exact_divide(num, f.P[b], order), Poly::constant(k, 1)};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotDivisible) throw;
        pd.R[a][b] = {std::move(num), f.P[b]};
      }
    }
  }

  const auto points = sample_points(table.root_system(), samples, seed);
  std::vector<std::vector<HighReal>> values;
  std::vector<std::vector<HighReal>> sums(points.size());
  for (std::size_t s = 0; s < points.size(); ++s) {
    values.push_back(high_basis_values(basis, table, points[s]));
    for (std::size_t a = 0; a < na; ++a) {
      sums[s].push_back(high_inverse_sin_sum(table.at(f.root_orbits[a]), table.xi(), points[s]));
    }
  }

  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < na; ++b) {
      // Normal equations for y = rho s + C.
      HighReal ss = 0, s1 = 0, sy = 0, y1 = 0;
      std::vector<HighReal> y(points.size());
      for (std::size_t s = 0; s < points.size(); ++s) {
        y[s] = high_evaluate(pd.R[a][b], values[s]);
        ss += sums[s][a] * sums[s][a];
        s1 += sums[s][a];
        sy += sums[s][a] * y[s];
        y1 += y[s];
      }
      const HighReal n = static_cast<double>(points.size());
      const HighReal det = ss * n - s1 * s1;
      if (abs(det) < HighReal(1e-30)) throw Error(ErrorCode::SingularSample, "degenerate sample set");
      const HighReal rho = (sy * n - s1 * y1) / det;
      const HighReal c = (ss * y1 - s1 * sy) / det;
      const Rational rho_q = rationalize(static_cast<long double>(rho), 1000);
      const Rational c_q = rationalize(static_cast<long double>(c), 1000);
      HighReal worst = 0;
      for (std::size_t s = 0; s < points.size(); ++s) {
        const HighReal fitted = to_high(rho_q) * sums[s][a] + to_high(c_q);
        const HighReal scale = std::max(HighReal(1), abs(y[s]));
        worst = std::max(worst, abs(y[s] - fitted) / scale);
      }
      pd.rho[a][b] = rho_q;
      pd.C[a][b] = c_q;
      pd.residual[a][b] = static_cast<long double>(worst);
      if (worst >= HighReal(1e-8)) {
        throw Error(ErrorCode::FitResidualTooLarge,
                    "R(" + f.root_orbits[a].to_string() + "," + f.root_orbits[b].to_string() +
                        ") residual " + std::to_string(static_cast<double>(worst)));
      }
    }
  }
  return pd;
}

long double evaluate_R(const RationalFunction& R, const BasisResult& basis, const OrbitTable& table,
                       std::span<const long double> x) {
  const auto v = high_basis_values(basis, table, x);
  return static_cast<long double>(high_evaluate(R, v));
}

long double potential_W(std::span<const long double> x, const std::vector<Rational>& gamma, const PotentialData& pd,
                        const BasisResult& basis, const OrbitTable& table) {
  const RootSystem& rs = table.root_system();
  if (!wall_check(rs, x).empty()) throw Error(ErrorCode::OnWall, "x lies on a wall");
  const std::size_t na = pd.root_orbits.size();
  if (gamma.size() != na) throw Error(ErrorCode::DimensionMismatch, "coupling count");
  const auto v = high_basis_values(basis, table, x);
  HighReal closed = 0, direct = 0;
  for (std::size_t a = 0; a < na; ++a) {
    const HighReal s = high_inverse_sin_sum(table.at(pd.root_orbits[a]), table.xi(), x);
    for (std::size_t b = 0; b < na; ++b) {
      const Rational pref = (gamma[a] * gamma[b] - Rational(1, 4)) / 4;
      if (pref == 0) continue;
      const HighReal p = to_high(pref);
      closed += p * (to_high(pd.rho[a][b]) * s + to_high(pd.C[a][b]));
      direct += p * high_evaluate(pd.R[a][b], v);
    }
  }
  if (abs(closed - direct) > HighReal(1e-8) * std::max(HighReal(1), abs(closed))) {
    throw Error(ErrorCode::CrossCheckMismatch, "closed form and polynomial form of W disagree");
  }
  return static_cast<long double>(closed);
}

}  // namespace trigweyl
