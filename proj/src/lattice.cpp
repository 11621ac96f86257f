#include "trigweyl/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdlib>
#include <sstream>

#include "trigweyl/error.hpp"

namespace trigweyl {

namespace {

void require_same_dim(const LatticeVector& u, const LatticeVector& v) {
  if (u.dim() != v.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimensions " + std::to_string(u.dim()) + " and " + std::to_string(v.dim()));
  }
}

}  // namespace

LatticeVector::LatticeVector(std::size_t dim) : dim_(dim) {
  if (dim > kMaxRank) throw Error(ErrorCode::DimensionMismatch, "rank exceeds kMaxRank");
}

LatticeVector::LatticeVector(std::initializer_list<std::int32_t> scaled) : LatticeVector(scaled.size()) {
  std::size_t i = 0;
  for (auto c : scaled) coords_[i++] = c;
}

LatticeVector LatticeVector::from_scaled(std::span<const std::int32_t> scaled) {
  LatticeVector v(scaled.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) v.coords_[i] = scaled[i];
  return v;
}

LatticeVector LatticeVector::from_units(std::span<const Rational> units) {
  LatticeVector v(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    Rational s = units[i] * kScale;
    if (s.get_den() != 1) {
      throw Error(ErrorCode::NotInLattice, "coordinate " + units[i].get_str() + " not on the 1/4 grid");
    }
    v.coords_[i] = static_cast<std::int32_t>(s.get_num().get_si());
  }
  return v;
}

LatticeVector LatticeVector::unit(std::size_t dim, std::size_t i) {
  LatticeVector v(dim);
  v.coords_[i] = kScale;
  return v;
}

bool LatticeVector::is_zero() const noexcept {
  for (std::size_t i = 0; i < dim_; ++i)
    if (coords_[i] != 0) return false;
  return true;
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  require_same_dim(*this, o);
  LatticeVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r.coords_[i] = coords_[i] + o.coords_[i];
  return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  require_same_dim(*this, o);
  LatticeVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r.coords_[i] = coords_[i] - o.coords_[i];
  return r;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r.coords_[i] = -coords_[i];
  return r;
}

LatticeVector LatticeVector::operator*(std::int32_t k) const {
  LatticeVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r.coords_[i] = k * coords_[i];
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < dim_; ++i) coords_[i] += o.coords_[i];
  return *this;
}

std::int32_t LatticeVector::max_abs() const noexcept {
  std::int32_t m = 0;
  for (std::size_t i = 0; i < dim_; ++i) m = std::max(m, std::abs(coords_[i]));
  return m;
}

bool LatticeVector::in_root_lattice() const noexcept {
  if (dim_ == 0) return true;
  const int first = ((coords_[0] % kScale) + kScale) % kScale;
  if (first != 0 && first != kScale / 2) return false;
  for (std::size_t i = 1; i < dim_; ++i) {
    if (((coords_[i] % kScale) + kScale) % kScale != first) return false;
  }
  return true;
}

std::uint64_t LatticeVector::key() const noexcept {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    k |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(coords_[i])) << (8 * i);
  }
  return k;
}

std::int64_t inner_scaled(const LatticeVector& u, const LatticeVector& v) {
  require_same_dim(u, v);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += static_cast<std::int64_t>(u[i]) * v[i];
  return s;
}

Rational inner(const LatticeVector& u, const LatticeVector& v) {
  return make_rational(inner_scaled(u, v), kScale * kScale);
}

Rational norm_sq(const LatticeVector& v) { return inner(v, v); }

LatticeVector reflect(const LatticeVector& v, const LatticeVector& root) {
  require_same_dim(v, root);
  const std::int64_t rr = inner_scaled(root, root);
  if (rr == 0) throw Error(ErrorCode::ZeroRoot, "reflection along the null vector");
  const std::int64_t two_ip = 2 * inner_scaled(root, v);
  LatticeVector r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const std::int64_t num = two_ip * root[i];
    if (num % rr != 0) throw Error(ErrorCode::NotInLattice, "reflection leaves the scaled grid");
    r[i] = static_cast<std::int32_t>(v[i] - num / rr);
  }
  return r;
}

OrderingVector::OrderingVector() : xi_{1'000'000'000, 1'000'000, 1'000, 1} {}

OrderingVector::OrderingVector(std::vector<std::int64_t> xi) : xi_(std::move(xi)) {}

std::int64_t OrderingVector::injective_bound() const noexcept {
  // Lexicographic dominance: a nonzero difference d with |d_i| <= 2B has
  // nonzero height when every xi_i exceeds 2B times the tail sum.
  std::int64_t bound = std::numeric_limits<std::int64_t>::max();
  std::int64_t tail = 0;
  for (std::size_t i = xi_.size(); i-- > 0;) {
    if (tail > 0) {
      const std::int64_t b = (xi_[i] - 1) / (2 * tail);
      bound = std::min(bound, b);
    }
    tail += xi_[i];
  }
  return bound;
}

void OrderingVector::require_injective(std::int64_t coord_bound) const {
  if (injective_bound() < coord_bound) {
    throw Error(ErrorCode::HeightCollision,
                "ordering vector injective only up to |coords| <= " + std::to_string(injective_bound()) +
                    ", need " + std::to_string(coord_bound));
  }
}

bool satisfies_chamber_inequalities(const OrderingVector& xi) {
  const auto x = xi.values();
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (!(x[i] > x[i + 1])) return false;
  if (x.empty() || x.back() <= 0) return false;
  std::int64_t tail = 0;
  for (std::size_t i = 1; i < x.size(); ++i) tail += x[i];
  return x[0] > tail;
}

std::int64_t height(const LatticeVector& v, const OrderingVector& xi) {
  if (v.dim() != xi.dim()) throw Error(ErrorCode::DimensionMismatch, "ordering vector rank");
  std::int64_t h = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) h += static_cast<std::int64_t>(v[i]) * xi.values()[i];
  return h;
}

std::int64_t coord_bound_for_norm(std::int64_t max_norm) {
  // smallest B with B^2 >= kScale^2 * max_norm
  const std::int64_t target = static_cast<std::int64_t>(kScale) * kScale * max_norm;
  auto b = static_cast<std::int64_t>(std::sqrt(static_cast<double>(target)));
  while (b * b < target) ++b;
  while (b > 0 && (b - 1) * (b - 1) >= target) --b;
  return b;
}

std::string to_text(const LatticeVector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] == 0) continue;
    Rational c = make_rational(v[i], kScale);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (c != 1) os << c.get_str();
    os << 'e' << (i + 1);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace trigweyl
