#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "trigweyl/rational.hpp"

namespace trigweyl {

/// Coordinates are stored multiplied by this factor. Root-lattice points need
/// halves and half-frequencies of those need quarters.
inline constexpr int kScale = 4;
inline constexpr std::size_t kMaxRank = 8;

/// A point beta = coords / kScale in the orthonormal e-basis.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim);
  /// Takes already scaled integer coordinates.
  LatticeVector(std::initializer_list<std::int32_t> scaled);
  static LatticeVector from_scaled(std::span<const std::int32_t> scaled);
  /// Takes coordinates in lattice units as rationals, e.g. {1/2, 1/2, 1/2, 1/2}.
  static LatticeVector from_units(std::span<const Rational> units);
  static LatticeVector unit(std::size_t dim, std::size_t i);

  std::size_t dim() const noexcept { return dim_; }
  std::int32_t operator[](std::size_t i) const noexcept { return coords_[i]; }
  std::int32_t& operator[](std::size_t i) noexcept { return coords_[i]; }
  std::span<const std::int32_t> scaled() const noexcept { return {coords_.data(), dim_}; }
  bool is_zero() const noexcept;

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  LatticeVector operator*(std::int32_t k) const;
  LatticeVector& operator+=(const LatticeVector& o);

  /// Largest absolute scaled coordinate.
  std::int32_t max_abs() const noexcept;

  /// Root lattice membership: all coordinates integral, or all half-odd.
  bool in_root_lattice() const noexcept;

  /// 64-bit packing of the low 8 bits of each coordinate, used for hashing.
  std::uint64_t key() const noexcept;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) noexcept {
    return a.dim_ == b.dim_ && a.coords_ == b.coords_;
  }
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) noexcept {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.coords_ <=> b.coords_;
  }

 private:
  std::array<std::int32_t, kMaxRank> coords_{};
  std::size_t dim_ = 0;
};

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept {
    std::uint64_t x = v.key() ^ (static_cast<std::uint64_t>(v.dim()) << 59);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

Rational inner(const LatticeVector& u, const LatticeVector& v);
Rational norm_sq(const LatticeVector& v);
/// Scaled inner product sum(u_i v_i), i.e. kScale^2 * (u, v).
std::int64_t inner_scaled(const LatticeVector& u, const LatticeVector& v);

/// s_root(v) = v - 2 (root, v) / (root, root) root. Throws ZeroRoot, and
/// NotInLattice when the image leaves the scaled integer grid.
LatticeVector reflect(const LatticeVector& v, const LatticeVector& root);

/// Generic linear functional used to order lattice vectors.
class OrderingVector {
 public:
  /// The default (1e9, 1e6, 1e3, 1) for rank 4.
  OrderingVector();
  explicit OrderingVector(std::vector<std::int64_t> xi);

  std::span<const std::int64_t> values() const noexcept { return xi_; }
  std::size_t dim() const noexcept { return xi_.size(); }

  /// Largest B such that height is injective on scaled boxes |coords_i| <= B
  /// (sufficient condition xi_i > 2 B sum_{j>i} xi_j).
  std::int64_t injective_bound() const noexcept;

  /// Throws HeightCollision unless injective_bound() >= coord_bound.
  void require_injective(std::int64_t coord_bound) const;

  friend bool operator==(const OrderingVector&, const OrderingVector&) = default;

 private:
  std::vector<std::int64_t> xi_;
};

/// Checks strict decrease, positivity and xi_1 > xi_2 + xi_3 + xi_4.
bool satisfies_chamber_inequalities(const OrderingVector& xi);

/// sum(coords_i * xi_i); sign selects the semiorbit.
std::int64_t height(const LatticeVector& v, const OrderingVector& xi);

/// Scaled coordinate bound ceil(kScale * sqrt(max_norm)).
std::int64_t coord_bound_for_norm(std::int64_t max_norm);

/// Human form, e.g. "3/2e1 + 1/2e2 + 1/2e3 + 1/2e4"; "0" for the null vector.
std::string to_text(const LatticeVector& v);

}  // namespace trigweyl

template <>
struct std::hash<trigweyl::LatticeVector> : trigweyl::LatticeVectorHash {};
