#include "trigweyl/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "trigweyl/error.hpp"
#include "trigweyl/parallel.hpp"
#include "trigweyl/poly_text.hpp"
#include "trigweyl/reference.hpp"

namespace trigweyl {

namespace {

using Vec4 = std::array<int, 4>;  // coordinates times two

struct Vec4Hash {
  std::size_t operator()(const Vec4& v) const noexcept {
    std::size_t h = 0;
    for (int c : v) h = h * 131 + static_cast<std::size_t>(c + 64);
    return h;
  }
};

LatticeVector from_doubled(const Vec4& v) {
  const std::array<std::int32_t, 4> s{v[0] * 2, v[1] * 2, v[2] * 2, v[3] * 2};
  return LatticeVector::from_scaled(s);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void add_report(CriterionResult& res, const DiffReport& report, bool flagged_ok = true) {
  res.detail.push_back(report.section + ": " + std::to_string(report.count("match")) + " match, " +
                       std::to_string(report.count("flagged")) + " flagged, " +
                       std::to_string(report.count("mismatch")) + " mismatch");
  for (const auto& e : report.entries) {
    if (e.status == "match") continue;
    if (e.status == "flagged" && flagged_ok) {
      res.detail.push_back("  flagged " + e.item + " (" + std::to_string(e.details.size()) + " notes)");
      continue;
    }
    res.detail.push_back("  " + e.status + " " + e.item);
    for (std::size_t i = 0; i < e.details.size() && i < 6; ++i) res.detail.push_back("    " + e.details[i]);
  }
  if (report.count("mismatch") != 0 || (!flagged_ok && report.count("flagged") != 0)) res.pass = false;
}

// 1. Orbit partition by a direct scan: every lattice point with norm <= 24,
// joined under the four simple reflections.
void criterion_orbits(Pipeline& pl, CriterionResult& res) {
  const OrbitTable& table = pl.table();
  const auto& ref = reference_data();
  const int max_norm = 24;
  const std::array<Vec4, 4> simple{Vec4{0, 2, -2, 0}, Vec4{0, 0, 2, -2}, Vec4{0, 0, 0, 2}, Vec4{1, -1, -1, -1}};
  std::vector<Vec4> points;
  std::unordered_map<Vec4, std::size_t, Vec4Hash> index;
  const int bound = static_cast<int>(std::floor(2 * std::sqrt(max_norm)));
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) {
          const int parity = a & 1;
          if ((b & 1) != parity || (c & 1) != parity || (d & 1) != parity) continue;
          if (a * a + b * b + c * c + d * d > 4 * max_norm) continue;
          index.emplace(Vec4{a, b, c, d}, points.size());
          points.push_back({a, b, c, d});
        }
  std::vector<std::size_t> parent(points.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const auto& s : simple) {
      const auto& v = points[i];
      const int vs = v[0] * s[0] + v[1] * s[1] + v[2] * s[2] + v[3] * s[3];
      const int ss = s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3];
      const int k = 2 * vs / ss;
      const Vec4 w{v[0] - k * s[0], v[1] - k * s[1], v[2] - k * s[2], v[3] - k * s[3]};
      parent[root(i)] = root(index.at(w));
    }
  }
  std::map<std::size_t, std::size_t> component_size;
  for (std::size_t i = 0; i < points.size(); ++i) ++component_size[root(i)];

  std::size_t nonzero = 0;
  for (const auto& o : table.orbits()) {
    if (o.norm() == 0 || o.norm() > max_norm) continue;
    ++nonzero;
    std::set<std::size_t> comps;
    for (const auto& e : o.elements) {
      Vec4 v{};
      for (std::size_t i = 0; i < 4; ++i) v[i] = e[i] / 2;
      comps.insert(root(index.at(v)));
    }
    if (comps.size() != 1 || component_size[*comps.begin()] != o.cardinal()) {
      res.pass = false;
      res.detail.push_back("orbit " + o.label.to_string() + " differs from the scanned class");
    }
  }
  std::size_t scanned_nonzero = component_size.size() - 1;
  res.detail.push_back(std::to_string(nonzero) + " nonzero orbits up to norm 24 (scan finds " +
                       std::to_string(scanned_nonzero) + ")");
  if (nonzero != scanned_nonzero || nonzero != ref.orbits.size()) res.pass = false;

  std::map<OrbitLabel, std::size_t> by_label;
  for (const auto& o : table.orbits())
    if (o.norm() > 0 && o.norm() <= max_norm) by_label[o.label] = o.cardinal();
  std::vector<std::size_t> computed, printed;
  for (const auto& [l, c] : by_label) computed.push_back(c);
  for (const auto& row : ref.orbits) printed.push_back(row.cardinal);
  if (computed != printed) {
    res.pass = false;
    res.detail.push_back("cardinal sequence differs from the printed table");
  }
  add_report(res, diff_orbits(table, ref), false);
}

void criterion_basis(Pipeline& pl, CriterionResult& res) {
  const auto& b = pl.basis();
  std::vector<std::string> labels;
  for (const auto& l : b.basis) labels.push_back(l.to_string());
  res.detail.push_back("basis {" + join(labels) + "}");
  if (b.basis != reference_data().basis) res.pass = false;
}

void criterion_expressions(Pipeline& pl, CriterionResult& res) {
  const auto& table = pl.table();
  const auto& b = pl.basis();
  add_report(res, diff_expressions(b, reference_data()));

  std::vector<OrbitLabel> labels;
  for (const auto& o : table.orbits()) labels.push_back(o.label);
  std::vector<char> full(labels.size(), 1), reduced(labels.size(), 1);
  ReducedVerifier verifier(table, b.basis);
  parallel_for(labels.size(), pl.config().threads, [&](std::size_t i) {
    const Poly& p = express(labels[i], b);
    reduced[i] = verifier.verify(labels[i], p);
    if (labels[i].norm <= 24) full[i] = verify_expression(labels[i], p, b, table);
  });
  std::size_t full_count = 0, bad = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].norm <= 24) ++full_count;
    if (!full[i] || !reduced[i]) {
      ++bad;
      res.detail.push_back("expression for " + invariant_name(labels[i]) + " fails verification");
    }
  }
  res.detail.push_back("exponential-sum substitution verified " + std::to_string(full_count) +
                       " orbits to norm 24; orbit-coefficient substitution verified " +
                       std::to_string(labels.size()) + " orbits to norm " + std::to_string(table.max_norm()));
  if (bad) res.pass = false;
}

// Numeric g^{mn}(x) = sum_i dT_m/dx_i dT_n/dx_i from the orbit elements.
long double numeric_metric(const Orbit& m, const Orbit& n, std::span<const long double> x) {
  std::array<long double, kMaxRank> gm{}, gn{};
  const std::size_t dim = x.size();
  auto grad = [&](const Orbit& o, std::array<long double, kMaxRank>& g) {
    for (const auto& e : o.elements) {
      long double ph = 0;
      for (std::size_t i = 0; i < dim; ++i) ph += static_cast<long double>(e[i]) / kScale * x[i];
      const long double s = std::sin(ph);
      for (std::size_t i = 0; i < dim; ++i) g[i] -= static_cast<long double>(e[i]) / kScale * s;
    }
  };
  grad(m, gm);
  grad(n, gn);
  long double sum = 0;
  for (std::size_t i = 0; i < dim; ++i) sum += gm[i] * gn[i];
  return sum;
}

std::vector<std::vector<long double>> uniform_points(std::size_t count, std::uint64_t seed, std::size_t dim) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<long double>> pts(count, std::vector<long double>(dim));
  for (auto& p : pts)
    for (auto& c : p) c = 2 * std::numbers::pi_v<long double> * static_cast<long double>(u(gen));
  return pts;
}

void criterion_metric(Pipeline& pl, CriterionResult& res, std::uint64_t seed) {
  const auto& table = pl.table();
  const auto& b = pl.basis();
  const auto& im = pl.metric();
  add_report(res, diff_metric(im, reference_data()), false);
  const std::size_t k = b.nvars();
  std::size_t agree = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const auto by_fusion = metric_entry_by_fusion(table, pl.fusions(), b.basis[i], b.basis[j]);
      const auto by_pairing = metric_entry_by_pairing(table, b.basis[i], b.basis[j]);
      if (by_fusion == by_pairing && by_fusion == im.orbit_form[i][j] && im.orbit_form[j][i] == by_fusion &&
          to_poly(by_fusion, b) == im.poly_form[i][j]) {
        ++agree;
      } else {
        res.pass = false;
        res.detail.push_back("constructions disagree at (" + b.basis[i].to_string() + "," + b.basis[j].to_string() + ")");
      }
    }
  res.detail.push_back(std::to_string(agree) + " entries agree between the fusion and pairing constructions");

  long double worst = 0;
  for (const auto& x : uniform_points(20, seed, table.root_system().rank())) {
    const auto values = basis_values(b, table, x);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const long double direct = numeric_metric(table.at(b.basis[i]), table.at(b.basis[j]), x);
        const long double poly = evaluate_numeric<long double>(im.poly_form[i][j], values);
        worst = std::max(worst, std::fabs(direct - poly) / std::max<long double>(1, std::fabs(direct)));
      }
  }
  res.detail.push_back("numeric gradient check at 20 points: max relative error " + str(static_cast<double>(worst)));
  if (!(worst < 1e-9L)) res.pass = false;
}

void criterion_factorization(Pipeline& pl, CriterionResult& res, std::uint64_t seed) {
  const auto& table = pl.table();
  const auto& b = pl.basis();
  const auto& im = pl.metric();
  const auto& f = pl.factorization();
  const auto& ref = reference_data();

  Poly product = Poly::constant(b.nvars(), f.constant);
  for (const auto& P : f.P) product = product * P;
  const bool det_ok = determinant(im.poly_form) == f.det && f.det == product;
  res.detail.push_back("det g = " + f.constant.get_str() + " * P1 * P2 exactly: " + (det_ok ? "yes" : "no"));
  if (!det_ok) res.pass = false;

  const DiffReport report = diff_factors(f, b, ref);
  add_report(res, report);
  for (const auto& e : report.entries) {
    // The first root factor has no known misprint and must match verbatim.
    if (e.item == "P1" && e.status != "match") res.pass = false;
  }

  for (std::size_t a = 0; a < f.P.size(); ++a) {
    const auto lead = asymptotic_report(f.P[a], b, table);
    Poly lead_poly(b.nvars());
    lead_poly.add_term(lead.monomial, lead.coefficient);
    const std::string text = to_text(lead_poly, b.variable_names(), TermOrder::graded(b.nvars()));
    const Poly printed = parse_poly(ref.root_factor_leading[a], b.basis);
    res.detail.push_back("leading term of P" + f.root_orbits[a].to_string() + ": " + text + " at frequency " +
                         to_text(lead.frequency));
    if (printed != lead_poly) res.pass = false;
  }
  for (const auto& [label, vec] : ref.weyl_vectors) {
    const LatticeVector w = weyl_vector(table.at(label), table.xi());
    res.detail.push_back("Weyl vector of orbit " + label.to_string() + ": " + to_text(w));
    if (w != vec) res.pass = false;
  }

  // (det g)(x) is the squared Jacobian of the invariant map.
  Poly abs_det(b.nvars());
  for (const auto& [m, c] : f.det.terms()) abs_det.add_term(m, abs(c));
  long double worst = 0;
  for (const auto& x : uniform_points(10, seed + 1, table.root_system().rank())) {
    const auto values = basis_values(b, table, x);
    const long double j = jacobian_det(b, table, x);
    const long double d = evaluate_numeric<long double>(f.det, values);
    // The expanded determinant cancels heavily; measure against its term sizes.
    std::vector<long double> magnitudes;
    for (auto v : values) magnitudes.push_back(std::fabs(v));
    const long double scale = evaluate_numeric<long double>(abs_det, magnitudes);
    worst = std::max(worst, std::fabs(d - j * j) / std::max<long double>(1, scale));
  }
  res.detail.push_back("det g versus squared Jacobian at 10 points: max error " + str(static_cast<double>(worst)) +
                       " relative to the summed term magnitudes");
  if (!(worst < 1e-12L)) res.pass = false;
}

void criterion_product_identity(Pipeline& pl, CriterionResult& res, std::uint64_t seed) {
  const auto& table = pl.table();
  const auto& b = pl.basis();
  const auto& f = pl.factorization();
  const auto pts = uniform_points(100, seed + 2, table.root_system().rank());
  for (std::size_t a = 0; a < f.P.size(); ++a) {
    const Orbit& roots = table.at(f.root_orbits[a]);
    std::vector<LatticeVector> positive;
    for (const auto& e : roots.elements)
      if (height(e, table.xi()) > 0) positive.push_back(e);
    long double worst = 0;
    for (const auto& x : pts) {
      long double prod = 1;
      for (const auto& alpha : positive) {
        long double ph = 0;
        for (std::size_t i = 0; i < x.size(); ++i) ph += static_cast<long double>(alpha[i]) / kScale * x[i];
        const long double s = std::sin(ph / 2);
        prod *= 4 * s * s;
      }
      const long double P = evaluate_numeric<long double>(f.P[a], basis_values(b, table, x));
      worst = std::max(worst, std::fabs(P + prod) / std::max<long double>(1, std::fabs(P)));
    }
    res.detail.push_back("P" + f.root_orbits[a].to_string() + " against -2^" + std::to_string(2 * positive.size()) +
                         " prod sin^2 at 100 points: max relative error " + str(static_cast<double>(worst)));
    if (!(worst < 1e-6L)) res.pass = false;
  }
}

void criterion_r(Pipeline& pl, CriterionResult& res) {
  const auto& b = pl.basis();
  const auto& im = pl.metric();
  const auto& f = pl.factorization();
  const auto& r = pl.r();
  add_report(res, diff_r(r, b, reference_data()), false);
  const std::size_t k = b.nvars();
  bool exact = true;
  for (std::size_t a = 0; a < f.P.size(); ++a)
    for (std::size_t m = 0; m < k; ++m) {
      Poly numerator(k);
      for (std::size_t n = 0; n < k; ++n) numerator += im.poly_form[m][n] * partial(f.P[a], n);
      if (r.r[a][m] * f.P[a] != numerator) exact = false;
    }
  res.detail.push_back(std::string("r * P reproduces g grad P exactly: ") + (exact ? "yes" : "no"));
  if (!exact) res.pass = false;
}

const std::vector<std::vector<Rational>>& flag_gammas() {
  static const std::vector<std::vector<Rational>> g{
      {0, 0}, {Rational(1, 3), Rational(1, 5)}, {1, 1}, {-2, 7}, {Rational(1, 2), Rational(1, 2)}};
  return g;
}

std::string gamma_text(const std::vector<Rational>& g) {
  std::vector<std::string> parts;
  for (const auto& x : g) parts.push_back(x.get_str());
  return "(" + join(parts, ",") + ")";
}

void criterion_flag(Pipeline& pl, CriterionResult& res) {
  const auto& table = pl.table();
  const auto& b = pl.basis();
  const auto& im = pl.metric();
  const auto& r = pl.r();
  const unsigned threads = pl.config().threads;
  const auto printed = graded_flag_weights(b);
  const auto chamber = chamber_flag_weights(b, table);
  const TermOrder order = asymptotic_order(b, table);
  auto weights_text = [](const std::vector<std::int64_t>& w) {
    std::vector<std::string> p;
    for (auto x : w) p.push_back(std::to_string(x));
    return "(" + join(p, ",") + ")";
  };

  for (const auto& gamma : flag_gammas()) {
    const OperatorSpec op = make_operator(im, r, gamma);
    // Invariance with the printed grading.
    std::int64_t first_bad = -1;
    std::string message;
    for (std::int64_t N = 0; N <= 12 && first_bad < 0; ++N) {
      try {
        flag_matrix(op, FlagSpace(printed, N), threads);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::FlagViolation) throw;
        first_bad = N;
        message = e.what();
      }
    }
    if (first_bad >= 0) {
      res.pass = false;
      res.detail.push_back("gamma " + gamma_text(gamma) + ", weights " + weights_text(printed) + ": V_" +
                           std::to_string(first_bad) + " not invariant (" + message + ")");
    } else {
      res.detail.push_back("gamma " + gamma_text(gamma) + ", weights " + weights_text(printed) +
                           ": invariant for N <= 12");
    }

    // Invariance, triangularity, nesting and residuals with the chamber grading.
    std::vector<std::string> problems;
    std::multiset<Rational> previous;
    std::vector<long double> previous_approx;
    std::size_t pairs = 0, missing = 0, irrational = 0;
    for (std::int64_t N = 0; N <= 12; ++N) {
      const FlagSpace space(chamber, N);
      RationalMatrix M;
      try {
        M = flag_matrix(op, space, threads);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::FlagViolation) throw;
        problems.push_back("V_" + std::to_string(N) + " not invariant: " + e.what());
        break;
      }
      for (std::size_t row = 0; row < space.dim(); ++row)
        for (std::size_t col = 0; col < space.dim(); ++col)
          if (M[row][col] != 0 && space.weight(space.monomials()[col]) > space.weight(space.monomials()[row]))
            problems.push_back("V_" + std::to_string(N) + " matrix raises weight");
      const auto spec = spectrum(op, space, order, threads);
      std::multiset<Rational> current;
      std::vector<long double> approx;
      for (const auto& e : spec) {
        if (e.exact) {
          current.insert(*e.exact);
        } else {
          approx.push_back(e.approx);
          if (N == 12) ++irrational;
        }
        if (N == 12) {
          if (e.eigenfunction) {
            ++pairs;
            if (e.exact && apply_D(op, *e.eigenfunction) != *e.eigenfunction * *e.exact)
              problems.push_back("eigenpair residual nonzero at eigenvalue " + e.exact->get_str());
          } else {
            ++missing;
          }
        }
      }
      if (!std::includes(current.begin(), current.end(), previous.begin(), previous.end()))
        problems.push_back("spectrum of V_" + std::to_string(N - 1) + " not contained in V_" + std::to_string(N));
      for (auto x : previous_approx) {
        if (std::none_of(approx.begin(), approx.end(), [&](long double y) { return std::fabs(x - y) < 1e-9L; }))
          problems.push_back("numeric eigenvalue lost between V_" + std::to_string(N - 1) + " and V_" + std::to_string(N));
      }
      previous = std::move(current);
      previous_approx = std::move(approx);
    }
    std::string line = "gamma " + gamma_text(gamma) + ", weights " + weights_text(chamber) + ": ";
    if (problems.empty()) {
      line += "invariant and triangular for N <= 12, spectra nest, " + std::to_string(pairs) +
              " eigenpairs with zero residual on V_12";
      if (missing) line += ", " + std::to_string(missing) + " eigenvalues in Jordan blocks without eigenfunction";
      if (irrational) line += ", " + std::to_string(irrational) + " irrational";
    } else {
      res.pass = false;
      line += problems.front() + (problems.size() > 1 ? " (+" + std::to_string(problems.size() - 1) + " more)" : "");
    }
    res.detail.push_back(line);
  }
}

void criterion_potential(Pipeline& pl, CriterionResult& res, std::uint64_t seed) {
  const auto& table = pl.table();
  const auto& b = pl.basis();
  const auto& pd = pl.potential(seed);
  add_report(res, diff_potential(pd, reference_data()), false);
  long double worst_residual = 0;
  for (const auto& row : pd.residual)
    for (auto x : row) worst_residual = std::max(worst_residual, x);
  res.detail.push_back("fit residual " + str(static_cast<double>(worst_residual)) + " over " +
                       std::to_string(pd.samples) + " samples");
  if (!(worst_residual < 1e-8L)) res.pass = false;

  const std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
  long double worst = 0;
  for (const auto& x : sample_points(table.root_system(), 10, seed + 3))
    worst = std::max(worst, std::fabs(potential_W(x, half, pd, b, table)));
  res.detail.push_back("max |W| at gamma (1/2,1/2) over 10 points: " + str(static_cast<double>(worst)));
  if (!(worst < 1e-8L)) res.pass = false;
}

void criterion_properties(Pipeline& pl, CriterionResult& res, std::uint64_t seed) {
  const auto& table = pl.table();
  auto& fusions = pl.fusions();
  std::vector<const Orbit*> small;
  for (const auto& o : table.orbits())
    if (o.norm() > 0 && o.norm() <= 12) small.push_back(&o);

  // Triangle bound and unit top coefficient.
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i; j < small.size(); ++j) {
      const Orbit& m = *small[i];
      const Orbit& n = *small[j];
      const auto product = fusions.get(m.label, n.label);
      ++pairs;
      const LatticeVector top = m.max_vector + n.max_vector;
      const auto top_index = table.index_of(top);
      bool ok = top_index && product.coefficient(table[*top_index].label) == 1;
      const long a = m.norm(), c = n.norm();
      Integer total = 0;
      for (const auto& [k, coef] : product.terms) {
        const long d = k.norm - a - c;
        if (d * d > 4 * a * c) ok = false;
        if (coef <= 0 || coef.get_den() != 1) ok = false;
        if (top_index && k != table[*top_index].label &&
            height(table.at(k).max_vector, table.xi()) >= height(top, table.xi()))
          ok = false;
        total += coef.get_num() * static_cast<long>(table.at(k).cardinal());
      }
      if (total != static_cast<long>(m.cardinal() * n.cardinal())) ok = false;
      if (!ok) {
        res.pass = false;
        res.detail.push_back("fusion " + m.label.to_string() + " x " + n.label.to_string() + " violates the bounds");
      }
    }
  res.detail.push_back("triangle bound, unit top coefficient and cardinal sum hold for " + std::to_string(pairs) +
                       " pairs with norms <= 12");

  // Brute-force triple counts N(m,n,k) = #{beta + beta' + beta'' = 0}.
  std::vector<const Orbit*> tiny;
  for (const auto* o : small)
    if (o->norm() <= 6) tiny.push_back(o);
  std::unordered_map<LatticeVector, OrbitLabel> owner;
  for (const auto& o : table.orbits())
    if (o.norm() <= 24)
      for (const auto& e : o.elements) owner.emplace(e, o.label);
  std::map<std::array<OrbitLabel, 3>, long> triples;
  for (const auto* m : tiny)
    for (const auto* n : tiny) {
      std::map<OrbitLabel, long> sums;
      for (const auto& x : m->elements)
        for (const auto& y : n->elements) ++sums[owner.at(x + y)];
      const auto product = fusions.get(m->label, n->label);
      for (const auto& [k, count] : sums) {
        if (product.coefficient(k) * static_cast<long>(table.at(k).cardinal()) != count) {
          res.pass = false;
          res.detail.push_back("triple count differs for (" + m->label.to_string() + "," + n->label.to_string() +
                               "," + k.to_string() + ")");
        }
        if (k.norm > 0 && k.norm <= 6) triples[{m->label, n->label, k}] = count;
      }
      if (product != fusion_by_expansion(table, m->label, n->label)) {
        res.pass = false;
        res.detail.push_back("counting and expansion disagree for " + m->label.to_string() + " x " + n->label.to_string());
      }
    }
  std::size_t symmetric = 0;
  for (const auto& [key, count] : triples) {
    std::array<OrbitLabel, 3> p = key;
    std::sort(p.begin(), p.end());
    do {
      auto it = triples.find(p);
      const long other = it == triples.end() ? 0 : it->second;
      if (other != count) {
        res.pass = false;
        res.detail.push_back("triple count not symmetric at (" + key[0].to_string() + "," + key[1].to_string() + "," +
                             key[2].to_string() + ")");
      }
    } while (std::next_permutation(p.begin(), p.end()));
    ++symmetric;
  }
  res.detail.push_back("#Omega_k C^k_mn matches brute-force triple counts and is symmetric for " +
                       std::to_string(symmetric) + " triples with norms <= 6");

  // Random round trips.
  std::mt19937_64 gen(seed + 4);
  const auto& roots = table.root_system().roots();
  std::uniform_int_distribution<int> coord(-6, 6), parity(0, 1);
  std::uniform_int_distribution<std::size_t> pick_root(0, roots.size() - 1);
  std::size_t reflect_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const int p = parity(gen);
    Vec4 v{};
    for (auto& c : v) c = 2 * coord(gen) + p;
    const LatticeVector x = from_doubled(v);
    const LatticeVector& alpha = roots[pick_root(gen)];
    const LatticeVector y = reflect(x, alpha);
    if (norm_sq(y) != norm_sq(x) || reflect(y, alpha) != x || !table.root_system().in_lattice(y) ||
        inner(y, alpha) != -inner(x, alpha))
      ++reflect_bad;
  }
  std::vector<OrbitLabel> labels;
  for (const auto* o : small) labels.push_back(o->label);
  labels.push_back(table.null_orbit().label);
  std::uniform_int_distribution<std::size_t> pick_label(0, labels.size() - 1), count(1, 5);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
  std::size_t combo_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    InvariantCombo c;
    for (std::size_t n = count(gen); n > 0; --n) {
      const auto l = labels[pick_label(gen)];
      const long q = num(gen);
      const long d = den(gen);
      c.add(l, make_rational(q, d));
    }
    std::erase_if(c.terms, [](const auto& kv) { return kv.second == 0; });
    if (decompose(expand(c, table), table) != c) ++combo_bad;
  }
  res.detail.push_back("1000 reflections preserve norm and lattice (" + std::to_string(reflect_bad) +
                       " failures); 1000 expand/decompose round trips (" + std::to_string(combo_bad) + " failures)");
  if (reflect_bad || combo_bad) res.pass = false;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(Pipeline& pipeline, const AcceptanceOptions& options) {
  struct Entry {
    int id;
    const char* name;
    std::function<void(CriterionResult&)> run;
  };
  const std::uint64_t seed = options.seed;
  const std::vector<Entry> entries{
      {1, "orbit table to norm 24", [&](CriterionResult& r) { criterion_orbits(pipeline, r); }},
      {2, "basis discovery", [&](CriterionResult& r) { criterion_basis(pipeline, r); }},
      {3, "basis expressions", [&](CriterionResult& r) { criterion_expressions(pipeline, r); }},
      {4, "inverse metric", [&](CriterionResult& r) { criterion_metric(pipeline, r, seed); }},
      {5, "determinant factorization", [&](CriterionResult& r) { criterion_factorization(pipeline, r, seed); }},
      {6, "numeric sine-product identity", [&](CriterionResult& r) { criterion_product_identity(pipeline, r, seed); }},
      {7, "r coefficients", [&](CriterionResult& r) { criterion_r(pipeline, r); }},
      {8, "flag invariance and spectrum", [&](CriterionResult& r) { criterion_flag(pipeline, r); }},
      {9, "potential constants", [&](CriterionResult& r) { criterion_potential(pipeline, r, seed); }},
      {10, "fusion and round-trip properties", [&](CriterionResult& r) { criterion_properties(pipeline, r, seed); }},
  };
  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), e.id) == options.only.end())
      continue;
    CriterionResult r{e.id, e.name, true, {}};
    try {
      e.run(r);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail.push_back(std::string("error: ") + ex.what());
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string to_text(const CriterionResult& result) {
  std::ostringstream os;
  os << (result.pass ? "PASS" : "FAIL") << ' ' << (result.id < 10 ? " " : "") << result.id << "  " << result.name
     << '\n';
  for (const auto& d : result.detail) os << "        " << d << '\n';
  return os.str();
}

}  // namespace trigweyl
