#include "trigweyl/weyl_orbits.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <unordered_set>

#include "trigweyl/error.hpp"

namespace trigweyl {

std::string OrbitLabel::to_string() const {
  if (tag == 0) return std::to_string(norm);
  return std::to_string(norm) + "," + std::to_string(tag);
}

OrbitLabel OrbitLabel::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '{' || s.front() == '(')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '}' || s.back() == ')')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto to_int = [&](std::string_view s) {
    s = trim(s);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 0) {
      throw Error(ErrorCode::ParseError, "bad orbit label '" + std::string(text) + "'");
    }
    return v;
  };
  OrbitLabel l;
  if (auto comma = text.find(','); comma != std::string_view::npos) {
    l.norm = to_int(text.substr(0, comma));
    l.tag = to_int(text.substr(comma + 1));
  } else {
    l.norm = to_int(text);
  }
  return l;
}

namespace {

void sort_by_height_desc(std::vector<LatticeVector>& v, const OrderingVector& xi) {
  std::vector<std::pair<std::int64_t, LatticeVector>> keyed;
  keyed.reserve(v.size());
  for (auto& x : v) keyed.emplace_back(height(x, xi), x);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = keyed[i].second;
}

int integral_norm(const LatticeVector& v) {
  const Rational n = norm_sq(v);
  if (n.get_den() != 1) throw Error(ErrorCode::NotInLattice, to_text(v) + " has non-integral norm");
  return static_cast<int>(n.get_num().get_si());
}

}  // namespace

Orbit expand_orbit(const RootSystem& rs, const LatticeVector& seed, const OrderingVector& xi) {
  if (seed.dim() != rs.rank()) throw Error(ErrorCode::DimensionMismatch, "seed rank");
  if (!rs.in_lattice(seed)) throw Error(ErrorCode::NotInLattice, to_text(seed));
  std::unordered_set<LatticeVector, LatticeVectorHash> seen{seed};
  std::vector<LatticeVector> elements{seed};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& g : rs.generators()) {
      LatticeVector w = g.apply(elements[k]);
      if (seen.insert(w).second) elements.push_back(w);
    }
  }
  Orbit orbit;
  orbit.label = {integral_norm(seed), 0};
  orbit.generators = {seed};
  sort_by_height_desc(elements, xi);
  orbit.elements = std::move(elements);
  orbit.max_vector = max_vector(orbit, xi);
  return orbit;
}

LatticeVector max_vector(const Orbit& orbit, const OrderingVector& xi) {
  if (orbit.elements.empty()) throw Error(ErrorCode::UnknownOrbit, "empty orbit");
  const LatticeVector* best = nullptr;
  std::int64_t best_h = 0;
  bool tie = false;
  for (const auto& v : orbit.elements) {
    const std::int64_t h = height(v, xi);
    if (best == nullptr || h > best_h) {
      best = &v;
      best_h = h;
      tie = false;
    } else if (h == best_h) {
      tie = true;
    }
  }
  if (tie) {
    throw Error(ErrorCode::HeightCollision, "orbit " + orbit.label.to_string() + " has two maximal vectors");
  }
  return *best;
}

Semiorbits semiorbit_split(const Orbit& orbit, const OrderingVector& xi) {
  Semiorbits s;
  for (const auto& v : orbit.elements) {
    const std::int64_t h = height(v, xi);
    if (h == 0) {
      throw Error(ErrorCode::HeightCollision, to_text(v) + " lies on the hyperplane (alpha, xi) = 0");
    }
    (h > 0 ? s.positive : s.negative).push_back(v);
  }
  sort_by_height_desc(s.positive, xi);
  sort_by_height_desc(s.negative, xi);
  return s;
}

LatticeVector weyl_vector(const Orbit& orbit, const OrderingVector& xi) {
  const Semiorbits s = semiorbit_split(orbit, xi);
  LatticeVector rho(orbit.elements.front().dim());
  for (const auto& v : s.positive) rho += v;
  return rho;
}

OrbitTable::OrbitTable(RootSystem rs, int max_norm, OrderingVector xi)
    : rs_(std::move(rs)), max_norm_(max_norm), xi_(std::move(xi)) {}

namespace {

// Calls f on every scaled vector with even coordinates in [-bound, bound]^rank.
template <class F>
void scan_box(std::size_t rank, std::int32_t bound, F&& f) {
  LatticeVector v(rank);
  for (std::size_t i = 0; i < rank; ++i) v[i] = -bound;
  while (true) {
    f(v);
    std::size_t i = 0;
    for (; i < rank; ++i) {
      if (v[i] + 2 <= bound) {
        v[i] += 2;
        break;
      }
      v[i] = -bound;
    }
    if (i == rank) return;
  }
}

}  // namespace

OrbitTable OrbitTable::enumerate(const RootSystem& rs, int max_norm, const OrderingVector& xi) {
  if (max_norm < 1) throw Error(ErrorCode::OrbitOutOfTable, "max_norm must be at least 1");
  if (xi.dim() != rs.rank()) throw Error(ErrorCode::DimensionMismatch, "ordering vector rank");
  const std::int64_t bound = coord_bound_for_norm(max_norm);
  xi.require_injective(bound);

  OrbitTable table(rs, max_norm, xi);
  const std::int64_t limit = static_cast<std::int64_t>(kScale) * kScale * max_norm;
  // Lattice points have even scaled coordinates.
  const auto even_bound = static_cast<std::int32_t>(bound - (bound % 2));

  std::unordered_set<LatticeVector, LatticeVectorHash> assigned;
  std::vector<Orbit> found;
  scan_box(rs.rank(), even_bound, [&](const LatticeVector& v) {
    if (v.is_zero() || !rs.in_lattice(v)) return;
    if (inner_scaled(v, v) > limit) return;
    if (assigned.count(v) != 0) return;
    Orbit orbit = expand_orbit(rs, v, xi);
    for (const auto& w : orbit.elements) assigned.insert(w);
    found.push_back(std::move(orbit));
  });

  // Labels: authority list up to its norm, height order beyond.
  std::vector<bool> labelled(found.size(), false);
  std::unordered_map<LatticeVector, std::size_t, LatticeVectorHash> owner;
  for (std::size_t k = 0; k < found.size(); ++k)
    for (const auto& w : found[k].elements) owner.emplace(w, k);
  for (const auto& seed : rs.label_authority()) {
    if (seed.norm > max_norm) continue;
    auto it = owner.find(seed.generators.front());
    if (it == owner.end()) throw Error(ErrorCode::CrossCheckMismatch, "authority seed outside the lattice scan");
    for (const auto& g : seed.generators) {
      auto jt = owner.find(g);
      if (jt == owner.end() || jt->second != it->second) {
        throw Error(ErrorCode::CrossCheckMismatch,
                    "authority generators of " + OrbitLabel{seed.norm, seed.tag}.to_string() + " span two orbits");
      }
    }
    Orbit& o = found[it->second];
    if (labelled[it->second]) throw Error(ErrorCode::CrossCheckMismatch, "orbit labelled twice");
    o.label = {seed.norm, seed.tag};
    o.generators = seed.generators;
    labelled[it->second] = true;
  }
  std::map<int, std::vector<std::size_t>> by_norm;
  for (std::size_t k = 0; k < found.size(); ++k) {
    if (labelled[k]) continue;
    if (found[k].norm() <= rs.label_authority_norm()) {
      throw Error(ErrorCode::CrossCheckMismatch,
                  "orbit of " + to_text(found[k].max_vector) + " missing from the label authority");
    }
    by_norm[found[k].norm()].push_back(k);
  }
  for (auto& [norm, ks] : by_norm) {
    std::sort(ks.begin(), ks.end(), [&](std::size_t a, std::size_t b) {
      return height(found[a].max_vector, xi) < height(found[b].max_vector, xi);
    });
    for (std::size_t t = 0; t < ks.size(); ++t) {
      Orbit& o = found[ks[t]];
      o.label = {norm, ks.size() == 1 ? 0 : static_cast<int>(t + 1)};
      o.generators = {o.max_vector};
    }
  }

  std::sort(found.begin(), found.end(), [&](const Orbit& a, const Orbit& b) {
    return height(a.max_vector, xi) < height(b.max_vector, xi);
  });
  Orbit null;
  null.label = {0, 0};
  null.max_vector = LatticeVector(rs.rank());
  null.generators = {null.max_vector};
  null.elements = {null.max_vector};
  table.orbits_.push_back(std::move(null));
  for (auto& o : found) table.orbits_.push_back(std::move(o));
  table.index_members();
  return table;
}

OrbitTable OrbitTable::restore(const RootSystem& rs, int max_norm, const OrderingVector& xi,
                               const std::vector<Orbit>& skeletons, const std::vector<std::size_t>& cardinals) {
  OrbitTable table(rs, max_norm, xi);
  for (std::size_t k = 0; k < skeletons.size(); ++k) {
    Orbit o;
    if (skeletons[k].max_vector.is_zero()) {
      o.max_vector = skeletons[k].max_vector;
      o.elements = {o.max_vector};
    } else {
      o = expand_orbit(rs, skeletons[k].max_vector, xi);
    }
    o.label = skeletons[k].label;
    o.generators = skeletons[k].generators;
    if (o.cardinal() != cardinals.at(k) || o.max_vector != skeletons[k].max_vector) {
      throw Error(ErrorCode::CacheError, "cached orbit " + o.label.to_string() + " does not re-expand");
    }
    table.orbits_.push_back(std::move(o));
  }
  table.index_members();
  return table;
}

void OrbitTable::index_members() {
  by_label_.clear();
  by_member_.clear();
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    by_label_.emplace(orbits_[k].label, k);
    for (const auto& w : orbits_[k].elements) by_member_.emplace(w, static_cast<std::uint32_t>(k));
  }
}

std::optional<std::size_t> OrbitTable::find(const OrbitLabel& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::size_t OrbitTable::index(const OrbitLabel& label) const {
  auto k = find(label);
  if (!k) throw Error(ErrorCode::UnknownOrbit, "no orbit labelled " + label.to_string());
  return *k;
}

std::optional<std::size_t> OrbitTable::index_of(const LatticeVector& v) const {
  auto it = by_member_.find(v);
  if (it == by_member_.end()) return std::nullopt;
  return it->second;
}

std::size_t OrbitTable::require_index_of(const LatticeVector& v) const {
  if (auto k = index_of(v)) return *k;
  if (!rs_.in_lattice(v)) throw Error(ErrorCode::NotInLattice, to_text(v));
  const Rational n = norm_sq(v);
  throw OrbitOutOfTable(static_cast<int>(n.get_num().get_si()), max_norm_);
}

std::vector<OrbitLabel> OrbitTable::labels_in_norm_order() const {
  std::vector<OrbitLabel> out;
  for (const auto& o : orbits_) out.push_back(o.label);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace trigweyl
