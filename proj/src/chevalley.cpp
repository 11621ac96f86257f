#include "trigweyl/chevalley.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "trigweyl/error.hpp"
#include "trigweyl/poly_text.hpp"

namespace trigweyl {

std::optional<std::size_t> BasisResult::variable_index(const OrbitLabel& label) const {
  auto it = std::find(basis.begin(), basis.end(), label);
  if (it == basis.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis.begin());
}

std::vector<std::string> BasisResult::variable_names() const { return trigweyl::variable_names(basis); }

namespace {

struct Candidate {
  std::size_t m;
  std::size_t n;
};

// Pairs of earlier orbits whose maximal vectors add up to the target's,
// in preference order: smaller larger-norm first, then by labels.
std::vector<Candidate> candidate_pairs(const OrbitTable& table, std::size_t target) {
  std::vector<Candidate> out;
  const LatticeVector& top = table[target].max_vector;
  for (std::size_t m = 1; m < target; ++m) {
    const LatticeVector rest = top - table[m].max_vector;
    auto n = table.index_of(rest);
    if (!n || *n == 0 || *n >= target || table[*n].max_vector != rest) continue;
    if (table[m].label > table[*n].label) continue;  // each unordered pair once
    out.push_back({m, *n});
  }
  std::sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
    const auto key = [&](const Candidate& c) {
      return std::tuple(std::max(table[c.m].norm(), table[c.n].norm()), table[c.m].label, table[c.n].label);
    };
    return key(a) < key(b);
  });
  return out;
}

}  // namespace

BasisResult build_basis(const OrbitTable& table, FusionTable& fusions) {
  BasisResult result;
  result.max_norm = table.max_norm();

  std::vector<std::vector<Candidate>> pairs(table.size());
  for (std::size_t t = 1; t < table.size(); ++t) {
    pairs[t] = candidate_pairs(table, t);
    if (pairs[t].empty()) result.basis.push_back(table[t].label);
  }
  const std::size_t k = result.basis.size();

  std::vector<bool> done(table.size(), false);
  result.expressions.emplace(table[0].label, Poly::constant(k, 1));
  done[0] = true;
  for (std::size_t t = 1; t < table.size(); ++t) {
    const OrbitLabel label = table[t].label;
    if (pairs[t].empty()) {
      result.expressions.emplace(label, Poly::variable(k, *result.variable_index(label)));
      done[t] = true;
      continue;
    }
    const Candidate c = pairs[t].front();
    const OrbitLabel lm = table[c.m].label, ln = table[c.n].label;
    const InvariantCombo product = fusions.get(lm, ln);
    if (product.coefficient(label) != 1) {
      throw Error(ErrorCode::CrossCheckMismatch,
                  "top coefficient of " + lm.to_string() + " x " + ln.to_string() + " is not one");
    }
    Poly expr = result.expressions.at(lm) * result.expressions.at(ln);
    for (const auto& [other, coef] : product.terms) {
      if (other == label) continue;
      const std::size_t j = table.index(other);
      if (!done[j]) {
        throw Error(ErrorCode::InternalOrderingViolation,
                    "T" + other.to_string() + " needed before it was expressed (target " + label.to_string() + ")");
      }
      expr -= result.expressions.at(other) * coef;
    }
    result.expressions.emplace(label, std::move(expr));
    result.provenance.emplace(label, std::pair{lm, ln});
    done[t] = true;
  }
  return result;
}

const Poly& express(const OrbitLabel& orbit, const BasisResult& result) {
  auto it = result.expressions.find(orbit);
  if (it == result.expressions.end()) throw Error(ErrorCode::UnknownOrbit, "no expression for T" + orbit.to_string());
  return it->second;
}

BasisResult swap_basis_variable(const BasisResult& result, const OrbitLabel& old_label, const OrbitLabel& new_label) {
  const auto idx = result.variable_index(old_label);
  if (!idx) throw Error(ErrorCode::UnknownOrbit, "T" + old_label.to_string() + " is not a basis variable");
  const Poly& replacement = express(new_label, result);
  const std::size_t k = result.nvars();

  // replacement = c * T_old + f with f free of T_old.
  Rational c = 0;
  Poly f(k);
  for (const auto& [m, coef] : replacement.terms()) {
    if (m[*idx] == 0) {
      f.add_term(m, coef);
      continue;
    }
    Monomial unit{};
    unit[*idx] = 1;
    if (m != unit) {
      throw Error(ErrorCode::NotDivisible,
                  "T" + new_label.to_string() + " is not linear in T" + old_label.to_string() + " alone");
    }
    c = coef;
  }
  if (c == 0) throw Error(ErrorCode::NotDivisible, "T" + new_label.to_string() + " does not involve T" + old_label.to_string());

  std::vector<Poly> images;
  for (std::size_t i = 0; i < k; ++i) images.push_back(Poly::variable(k, i));
  // In the new variable set slot idx carries T_new, so T_old = (T_new - f) / c.
  images[*idx] = (Poly::variable(k, *idx) - f) * (Rational(1) / c);

  BasisResult out;
  out.basis = result.basis;
  out.basis[*idx] = new_label;
  out.max_norm = result.max_norm;
  for (const auto& [label, expr] : result.expressions) out.expressions.emplace(label, substitute(expr, images));
  out.provenance = result.provenance;
  out.provenance.erase(new_label);
  return out;
}

bool verify_expression(const OrbitLabel& orbit, const Poly& expression, const BasisResult& result,
                       const OrbitTable& table) {
  const std::size_t dim = table.root_system().rank();
  std::vector<ExpSum> generators;
  for (const auto& b : result.basis) generators.push_back(exp_sum_of(table.at(b)));

  std::map<Monomial, ExpSum> powers;
  powers.emplace(Monomial{}, ExpSum::constant(dim, 1));
  std::function<const ExpSum&(const Monomial&)> value = [&](const Monomial& m) -> const ExpSum& {
    if (auto it = powers.find(m); it != powers.end()) return it->second;
    std::size_t i = 0;
    while (m[i] == 0) ++i;
    Monomial prev = m;
    --prev[i];
    ExpSum v = multiply(value(prev), generators[i]);
    return powers.emplace(m, std::move(v)).first->second;
  };

  ExpSum lhs(dim);
  for (const auto& [m, c] : expression.terms()) lhs += value(m) * c;
  return lhs == exp_sum_of(table.at(orbit));
}

bool verify_expression(const OrbitLabel& orbit, const BasisResult& result, const OrbitTable& table) {
  return verify_expression(orbit, express(orbit, result), result, table);
}

ReducedVerifier::ReducedVerifier(const OrbitTable& table, std::vector<OrbitLabel> basis)
    : table_(&table), basis_(std::move(basis)) {
  for (const auto& b : basis_) basis_index_.push_back(table.index(b));
  std::vector<Integer> one(table.size());
  one[0] = 1;
  memo_.emplace(Monomial{}, std::move(one));
}

std::vector<Integer> ReducedVerifier::monomial_value(const Monomial& m) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  }
  const OrbitTable& table = *table_;

  LatticeVector top(table.root_system().rank());
  for (std::size_t i = 0; i < basis_.size(); ++i) top += table[basis_index_[i]].max_vector * m[i];
  const Rational top_norm = norm_sq(top);
  if (top_norm > table.max_norm()) {
    throw OrbitOutOfTable(static_cast<int>(top_norm.get_num().get_si()), table.max_norm());
  }

  std::size_t i = 0;
  while (m[i] == 0) ++i;
  Monomial prev = m;
  --prev[i];
  const std::vector<Integer> a = monomial_value(prev);
  const Orbit& factor = table[basis_index_[i]];

  std::vector<Integer> out(table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    const LatticeVector& gamma = table[k].max_vector;
    for (const auto& beta : factor.elements) {
      auto j = table.index_of(gamma - beta);
      if (j && a[*j] != 0) out[k] += a[*j];
    }
  }
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(m, std::move(out)).first->second;
}

std::vector<Rational> ReducedVerifier::value(const Poly& p) {
  std::vector<Rational> out(table_->size());
  for (const auto& [m, c] : p.terms()) {
    const auto v = monomial_value(m);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0) out[k] += c * Rational(v[k]);
    }
  }
  return out;
}

bool ReducedVerifier::verify(const OrbitLabel& orbit, const Poly& expression) {
  const auto v = value(expression);
  const std::size_t target = table_->index(orbit);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != (k == target ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace trigweyl
