#include "trigweyl/expsum.hpp"

#include <algorithm>

#include "trigweyl/error.hpp"

namespace trigweyl {

ExpSum ExpSum::constant(std::size_t dim, const Rational& c) {
  ExpSum s(dim);
  s.add(LatticeVector(dim), c);
  return s;
}

ExpSum ExpSum::term(const LatticeVector& freq, const Rational& c) {
  ExpSum s(freq.dim());
  s.add(freq, c);
  return s;
}

Rational ExpSum::coefficient(const LatticeVector& freq) const {
  auto it = terms_.find(freq);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExpSum::add(const LatticeVector& freq, const Rational& c) {
  if (freq.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "frequency rank");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(freq, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExpSum& ExpSum::operator+=(const ExpSum& o) {
  if (dim_ != o.dim_) throw Error(ErrorCode::DimensionMismatch, "exponential sum rank");
  for (const auto& [f, c] : o.terms_) add(f, c);
  return *this;
}

ExpSum& ExpSum::operator-=(const ExpSum& o) {
  if (dim_ != o.dim_) throw Error(ErrorCode::DimensionMismatch, "exponential sum rank");
  for (const auto& [f, c] : o.terms_) add(f, -c);
  return *this;
}

ExpSum& ExpSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, v] : terms_) v *= c;
  return *this;
}

std::vector<std::pair<LatticeVector, Rational>> ExpSum::sorted_terms(const OrderingVector& xi) const {
  std::vector<std::pair<LatticeVector, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const auto ha = height(a.first, xi), hb = height(b.first, xi);
    if (ha != hb) return ha > hb;
    return a.first < b.first;
  });
  return out;
}

Rational ExpSum::max_norm() const {
  std::int64_t m = 0;
  for (const auto& [f, c] : terms_) m = std::max(m, inner_scaled(f, f));
  return make_rational(m, kScale * kScale);
}

bool ExpSum::is_invariant(const OrbitTable& table) const {
  for (const auto& [f, c] : terms_) {
    auto k = table.index_of(f);
    if (!k) return false;
    for (const auto& w : table[*k].elements) {
      if (coefficient(w) != c) return false;
    }
  }
  return true;
}

Rational InvariantCombo::coefficient(const OrbitLabel& l) const {
  auto it = terms.find(l);
  return it == terms.end() ? Rational(0) : it->second;
}

void InvariantCombo::add(const OrbitLabel& l, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(l, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

ExpSum exp_sum_of(const Orbit& orbit) {
  ExpSum s(orbit.max_vector.dim());
  for (const auto& v : orbit.elements) s.add(v, 1);
  return s;
}

ExpSum multiply(const ExpSum& a, const ExpSum& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "exponential sum rank");
  const ExpSum& small = a.size() <= b.size() ? a : b;
  const ExpSum& big = a.size() <= b.size() ? b : a;
  ExpSum::Map acc;
  acc.reserve(small.size() * big.size() / 2 + 1);
  Rational prod;
  for (const auto& [fs, cs] : small.terms()) {
    for (const auto& [fb, cb] : big.terms()) {
      prod = cs * cb;
      auto [it, inserted] = acc.try_emplace(fs + fb, prod);
      if (!inserted) it->second += prod;
    }
  }
  ExpSum out(a.dim());
  for (auto& [f, c] : acc) out.add(f, c);
  return out;
}

InvariantCombo decompose(const ExpSum& s, const OrbitTable& table) {
  InvariantCombo combo;
  if (s.empty()) return combo;
  const Rational needed = s.max_norm();
  if (needed > table.max_norm()) {
    Integer up;
    mpz_cdiv_q(up.get_mpz_t(), needed.get_num_mpz_t(), needed.get_den_mpz_t());
    throw OrbitOutOfTable(static_cast<int>(up.get_si()), table.max_norm());
  }
  ExpSum::Map rest = s.terms();
  const auto order = s.sorted_terms(table.xi());
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (height(order[i].first, table.xi()) == height(order[i - 1].first, table.xi())) {
      throw Error(ErrorCode::HeightCollision, to_text(order[i].first) + " and " + to_text(order[i - 1].first));
    }
  }
  for (const auto& [freq, unused] : order) {
    auto it = rest.find(freq);
    if (it == rest.end()) continue;
    const Rational c = it->second;
    const std::size_t k = table.require_index_of(freq);
    const Orbit& orbit = table[k];
    if (orbit.max_vector != freq) {
      throw Error(ErrorCode::NotInvariant, "highest remaining frequency " + to_text(freq) + " is not maximal in " +
                                               orbit.label.to_string());
    }
    for (const auto& w : orbit.elements) {
      auto jt = rest.find(w);
      if (jt == rest.end() || jt->second != c) {
        throw Error(ErrorCode::NotInvariant,
                    "coefficients disagree on orbit " + orbit.label.to_string() + " at " + to_text(w));
      }
      rest.erase(jt);
    }
    combo.add(orbit.label, c);
  }
  return combo;
}

ExpSum expand(const InvariantCombo& combo, const OrbitTable& table) {
  ExpSum s(table.root_system().rank());
  for (const auto& [label, c] : combo.terms) {
    for (const auto& w : table.at(label).elements) s.add(w, c);
  }
  return s;
}

InvariantCombo fusion(const OrbitTable& table, const OrbitLabel& m, const OrbitLabel& n) {
  const Orbit& a = table.at(m);
  const Orbit& b = table.at(n);
  const LatticeVector top = a.max_vector + b.max_vector;
  if (norm_sq(top) > table.max_norm()) {
    throw OrbitOutOfTable(static_cast<int>(norm_sq(top).get_num().get_si()), table.max_norm());
  }
  const Orbit& small = a.cardinal() <= b.cardinal() ? a : b;
  const Orbit& big = a.cardinal() <= b.cardinal() ? b : a;
  const std::size_t big_index = table.index(big.label);
  const std::int64_t big_norm_scaled = static_cast<std::int64_t>(big.norm()) * kScale * kScale;
  const std::int64_t mm = m.norm, nn = n.norm;

  InvariantCombo combo;
  std::int64_t total = 0;
  for (std::size_t k = 0; k < table.size(); ++k) {
    const Orbit& target = table[k];
    const std::int64_t d = target.norm() - mm - nn;
    if (d * d > 4 * mm * nn) continue;  // outside |sqrt m - sqrt n| <= sqrt k <= sqrt m + sqrt n
    std::int64_t count = 0;
    for (const auto& beta : small.elements) {
      const LatticeVector rest = target.max_vector - beta;
      if (inner_scaled(rest, rest) != big_norm_scaled) continue;
      auto idx = table.index_of(rest);
      if (idx && *idx == big_index) ++count;
    }
    if (count > 0) {
      combo.add(target.label, Rational(static_cast<long>(count)));
      total += count * static_cast<std::int64_t>(target.cardinal());
    }
  }
  if (total != static_cast<std::int64_t>(a.cardinal() * b.cardinal())) {
    throw Error(ErrorCode::CrossCheckMismatch, "fusion " + m.to_string() + " x " + n.to_string() +
                                                   " accounts for " + std::to_string(total) + " of " +
                                                   std::to_string(a.cardinal() * b.cardinal()) + " products");
  }
  return combo;
}

InvariantCombo fusion_by_expansion(const OrbitTable& table, const OrbitLabel& m, const OrbitLabel& n) {
  return decompose(multiply(exp_sum_of(table.at(m)), exp_sum_of(table.at(n))), table);
}

InvariantCombo FusionTable::get(const OrbitLabel& m, const OrbitLabel& n) {
  const auto k = key(m, n);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(k); it != cache_.end()) return it->second;
  }
  InvariantCombo combo = fusion(*table_, k.first, k.second);
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(k, std::move(combo)).first->second;
}

void FusionTable::insert(const OrbitLabel& m, const OrbitLabel& n, InvariantCombo combo) {
  std::lock_guard lock(mutex_);
  cache_.insert_or_assign(key(m, n), std::move(combo));
}

std::map<std::pair<OrbitLabel, OrbitLabel>, InvariantCombo> FusionTable::snapshot() const {
  std::lock_guard lock(mutex_);
  return cache_;
}

}  // namespace trigweyl
