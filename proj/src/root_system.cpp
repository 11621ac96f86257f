#include "trigweyl/root_system.hpp"

#include <algorithm>
#include <unordered_set>

#include "trigweyl/error.hpp"

namespace trigweyl {

LatticeVector Generator::apply(const LatticeVector& v) const {
  if (kind == Kind::Reflection) return reflect(v, root);
  LatticeVector w = v;
  std::swap(w[i], w[j]);
  return w;
}

std::string Generator::describe() const {
  if (kind == Kind::Reflection) return "reflect(" + to_text(root) + ")";
  return "swap(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")";
}

namespace {

LatticeVector e(std::int32_t a, std::int32_t b, std::int32_t c, std::int32_t d) {
  return LatticeVector{a * kScale, b * kScale, c * kScale, d * kScale};
}

// Table of generating vectors for every F4 orbit up to norm 24, integral
// e-coordinates. Rows with two generators list both.
std::vector<LabelSeed> f4_label_authority() {
  return {
      {1, 0, {e(1, 0, 0, 0)}},
      {2, 0, {e(1, 1, 0, 0)}},
      {3, 0, {e(1, 1, 1, 0)}},
      {4, 0, {e(2, 0, 0, 0), e(1, 1, 1, 1)}},
      {5, 0, {e(2, 1, 0, 0)}},
      {6, 0, {e(2, 1, 1, 0)}},
      {7, 0, {e(2, 1, 1, 1)}},
      {8, 0, {e(2, 2, 0, 0)}},
      {9, 1, {e(2, 2, 1, 0)}},
      {9, 2, {e(3, 0, 0, 0)}},
      {10, 0, {e(3, 1, 0, 0), e(2, 2, 1, 1)}},
      {11, 0, {e(3, 1, 1, 0)}},
      {12, 0, {e(2, 2, 2, 0), e(3, 1, 1, 1)}},
      {13, 1, {e(3, 2, 0, 0)}},
      {13, 2, {e(2, 2, 2, 1)}},
      {14, 0, {e(3, 2, 1, 0)}},
      {15, 0, {e(3, 2, 1, 1)}},
      {16, 0, {e(2, 2, 2, 2), e(4, 0, 0, 0)}},
      {17, 1, {e(3, 2, 2, 0)}},
      {17, 2, {e(4, 1, 0, 0)}},
      {18, 1, {e(3, 3, 0, 0)}},
      {18, 2, {e(4, 1, 1, 0), e(3, 2, 2, 1)}},
      {19, 1, {e(3, 3, 1, 0)}},
      {19, 2, {e(4, 1, 1, 1)}},
      {20, 0, {e(4, 2, 0, 0), e(3, 3, 1, 1)}},
      {21, 1, {e(4, 2, 1, 0)}},
      {21, 2, {e(3, 2, 2, 2)}},
      {22, 0, {e(3, 3, 2, 0), e(4, 2, 1, 1)}},
      {23, 0, {e(3, 3, 2, 1)}},
      {24, 0, {e(4, 2, 2, 0)}},
  };
}

std::vector<LatticeVector> closure(const std::vector<Generator>& gens, const LatticeVector& seed) {
  std::unordered_set<LatticeVector, LatticeVectorHash> seen{seed};
  std::vector<LatticeVector> out{seed};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : gens) {
      LatticeVector w = g.apply(out[k]);
      if (seen.insert(w).second) out.push_back(w);
    }
  }
  return out;
}

}  // namespace

RootSystem RootSystem::f4() {
  RootSystem rs;
  rs.name_ = "F4";
  rs.rank_ = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    rs.generators_.push_back({Generator::Kind::Reflection, LatticeVector::unit(4, i), 0, 0});
  }
  constexpr std::int32_t h = kScale / 2;
  for (const auto& f : {LatticeVector{h, h, h, h}, LatticeVector{h, h, -h, -h}, LatticeVector{h, -h, h, -h},
                        LatticeVector{h, -h, -h, h}}) {
    rs.generators_.push_back({Generator::Kind::Reflection, f, 0, 0});
  }
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    rs.generators_.push_back({Generator::Kind::Transposition, LatticeVector(4), i, i + 1});
  }
  rs.lattice_ = [](const LatticeVector& v) { return v.dim() == 4 && v.in_root_lattice(); };
  rs.root_seeds_ = {e(1, 0, 0, 0), e(1, 1, 0, 0)};
  for (const auto& s : rs.root_seeds_) {
    auto orb = closure(rs.generators_, s);
    rs.roots_.insert(rs.roots_.end(), orb.begin(), orb.end());
  }
  std::sort(rs.roots_.begin(), rs.roots_.end());
  rs.authority_ = f4_label_authority();
  rs.authority_norm_ = 24;
  return rs;
}

}  // namespace trigweyl
