#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "trigweyl/lattice.hpp"
#include "trigweyl/root_system.hpp"

namespace trigweyl {

/// (norm, degeneracy tag). Tag 0 means the norm carries a single orbit; the
/// null orbit is (0, 0).
struct OrbitLabel {
  int norm = 0;
  int tag = 0;

  /// "9,1", "10", "0".
  std::string to_string() const;
  static OrbitLabel parse(std::string_view text);

  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

struct OrbitLabelHash {
  std::size_t operator()(const OrbitLabel& l) const noexcept {
    return std::hash<int>{}(l.norm * 64 + l.tag);
  }
};

struct Orbit {
  OrbitLabel label;
  /// Generating vectors; the first is the representative.
  std::vector<LatticeVector> generators;
  /// The unique element of maximal height.
  LatticeVector max_vector;
  /// Sorted by height, highest first.
  std::vector<LatticeVector> elements;

  const LatticeVector& representative() const { return generators.front(); }
  std::size_t cardinal() const noexcept { return elements.size(); }
  int norm() const noexcept { return label.norm; }
};

/// Fixed-point closure of `seed` under the generators. The label is left
/// default; `generators` holds the seed. Throws NotInLattice, HeightCollision.
Orbit expand_orbit(const RootSystem& rs, const LatticeVector& seed, const OrderingVector& xi = {});

/// The element of maximal height; throws HeightCollision on ties.
LatticeVector max_vector(const Orbit& orbit, const OrderingVector& xi);

struct Semiorbits {
  std::vector<LatticeVector> positive;
  std::vector<LatticeVector> negative;
};

/// Splits by the sign of the height. Throws HeightCollision if an element has
/// height zero (always the case for the null orbit).
Semiorbits semiorbit_split(const Orbit& orbit, const OrderingVector& xi);

/// Sum of the positive semiorbit.
LatticeVector weyl_vector(const Orbit& orbit, const OrderingVector& xi);

/// All orbits of nonzero lattice vectors with norm <= max_norm, plus the null
/// orbit, ordered by increasing height of their maximal vector.
class OrbitTable {
 public:
  static OrbitTable enumerate(const RootSystem& rs, int max_norm, const OrderingVector& xi = {});

  /// Rebuilds a table from labels and maximal vectors (cache restore). Each
  /// orbit is re-expanded and must reproduce `cardinals`.
  static OrbitTable restore(const RootSystem& rs, int max_norm, const OrderingVector& xi,
                            const std::vector<Orbit>& skeletons, const std::vector<std::size_t>& cardinals);

  const RootSystem& root_system() const noexcept { return rs_; }
  int max_norm() const noexcept { return max_norm_; }
  const OrderingVector& xi() const noexcept { return xi_; }

  std::span<const Orbit> orbits() const noexcept { return orbits_; }
  std::size_t size() const noexcept { return orbits_.size(); }
  const Orbit& operator[](std::size_t i) const { return orbits_[i]; }
  const Orbit& null_orbit() const { return orbits_.front(); }

  std::optional<std::size_t> find(const OrbitLabel& label) const;
  /// Throws UnknownOrbit.
  std::size_t index(const OrbitLabel& label) const;
  const Orbit& at(const OrbitLabel& label) const { return orbits_[index(label)]; }

  /// Orbit index of a member vector, or nullopt when outside the table.
  std::optional<std::size_t> index_of(const LatticeVector& v) const;
  /// Like index_of, but throws OrbitOutOfTable (or NotInLattice) on a miss.
  std::size_t require_index_of(const LatticeVector& v) const;

  /// Labels sorted by (norm, tag), the conventional listing order.
  std::vector<OrbitLabel> labels_in_norm_order() const;

 private:
  OrbitTable(RootSystem rs, int max_norm, OrderingVector xi);
  void index_members();

  RootSystem rs_;
  int max_norm_ = 0;
  OrderingVector xi_;
  std::vector<Orbit> orbits_;
  std::unordered_map<OrbitLabel, std::size_t, OrbitLabelHash> by_label_;
  std::unordered_map<LatticeVector, std::uint32_t, LatticeVectorHash> by_member_;
};

}  // namespace trigweyl
