#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trigweyl/lattice.hpp"

namespace trigweyl {

/// One generator of the Weyl group action: a reflection along a root or a
/// transposition of two e-basis coordinates.
struct Generator {
  enum class Kind { Reflection, Transposition };

  Kind kind = Kind::Reflection;
  LatticeVector root;
  std::size_t i = 0;
  std::size_t j = 0;

  LatticeVector apply(const LatticeVector& v) const;
  std::string describe() const;
};

/// Authoritative label for one orbit: the vectors that generate it, given in
/// lattice units, and its degeneracy tag (0 when the norm has a single orbit).
struct LabelSeed {
  int norm = 0;
  int tag = 0;
  std::vector<LatticeVector> generators;
};

class RootSystem {
 public:
  /// F4 in the orthonormal e-basis: reflections along e_i and
  /// f_i = (e_1 +- e_2 +- e_3 +- e_4)/2, plus the permutations of the e_i.
  static RootSystem f4();

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  bool in_lattice(const LatticeVector& v) const { return lattice_(v); }

  /// All roots, i.e. the union of the root orbits.
  const std::vector<LatticeVector>& roots() const noexcept { return roots_; }
  /// One seed per root orbit, shortest first.
  const std::vector<LatticeVector>& root_orbit_seeds() const noexcept { return root_seeds_; }

  /// Hard-coded labels for norms up to label_authority_norm().
  const std::vector<LabelSeed>& label_authority() const noexcept { return authority_; }
  int label_authority_norm() const noexcept { return authority_norm_; }

 private:
  std::string name_;
  std::size_t rank_ = 0;
  std::vector<Generator> generators_;
  std::function<bool(const LatticeVector&)> lattice_;
  std::vector<LatticeVector> roots_;
  std::vector<LatticeVector> root_seeds_;
  std::vector<LabelSeed> authority_;
  int authority_norm_ = 0;
};

}  // namespace trigweyl
