#include <map>
#include <set>

#include "fixtures.hpp"
#include "trigweyl/error.hpp"
#include "trigweyl/weyl_orbits.hpp"

using namespace trigweyl;
using fixtures::vec;

namespace {

// Lattice points of norm n in unit-doubled coordinates, counted directly.
std::map<int, std::size_t> scan_counts(int max_norm) {
  std::map<int, std::size_t> counts;
  const int b = static_cast<int>(2 * std::sqrt(max_norm));
  for (int a = -b; a <= b; ++a)
    for (int c = -b; c <= b; ++c)
      for (int d = -b; d <= b; ++d)
        for (int e = -b; e <= b; ++e) {
          const int par = a & 1;
          if ((c & 1) != par || (d & 1) != par || (e & 1) != par) continue;
          const int n4 = a * a + c * c + d * d + e * e;
          if (n4 % 4 == 0 && n4 / 4 <= max_norm) ++counts[n4 / 4];
        }
  return counts;
}

}  // namespace

TEST_CASE("the generator set closes the roots into two orbits of 24") {
  const auto rs = RootSystem::f4();
  CHECK(rs.roots().size() == 48);
  const auto table = OrbitTable::enumerate(rs, 2);
  REQUIRE(table.size() == 3);
  CHECK(table.at({1, 0}).cardinal() == 24);
  CHECK(table.at({2, 0}).cardinal() == 24);
}

TEST_CASE("orbit expansion") {
  const auto rs = RootSystem::f4();
  CHECK(expand_orbit(rs, vec({1, 0, 0, 0})).cardinal() == 24);
  CHECK(expand_orbit(rs, LatticeVector(4)).cardinal() == 1);
  CHECK(expand_orbit(rs, vec({2, 2, 1, 0})).cardinal() == 288);
}

TEST_CASE("two orbits at norm nine") {
  const auto table = OrbitTable::enumerate(RootSystem::f4(), 9);
  std::multiset<std::size_t> at9;
  for (const auto& o : table.orbits())
    if (o.norm() == 9) at9.insert(o.cardinal());
  CHECK(at9 == std::multiset<std::size_t>{24, 288});
  CHECK(table.at({9, 1}).cardinal() == 288);
  CHECK(table.at({9, 2}).cardinal() == 24);
}

TEST_CASE("orbits partition the lattice points counted by a direct scan") {
  const auto table = OrbitTable::enumerate(RootSystem::f4(), 24);
  std::map<int, std::size_t> from_orbits;
  for (const auto& o : table.orbits()) from_orbits[o.norm()] += o.cardinal();
  auto scanned = scan_counts(24);
  CHECK(from_orbits == scanned);
  std::size_t nonzero = 0;
  for (const auto& o : table.orbits()) nonzero += o.norm() > 0;
  CHECK(nonzero == 30);
}

TEST_CASE("Table 1 cardinals and representatives") {
  const auto table = OrbitTable::enumerate(RootSystem::f4(), 24);
  for (const auto& row : reference_data().orbits) {
    CAPTURE(row.label.to_string());
    const auto& o = table.at(row.label);
    CHECK(o.cardinal() == row.cardinal);
    for (const auto& g : row.generators) CHECK(table.index_of(g) == table.find(row.label));
  }
}

TEST_CASE("orbits are closed under the generators, symmetric and of one norm") {
  const auto rs = RootSystem::f4();
  const auto table = OrbitTable::enumerate(rs, 24);
  for (const auto& o : table.orbits()) {
    std::set<LatticeVector> members(o.elements.begin(), o.elements.end());
    for (const auto& e : o.elements) {
      CHECK(norm_sq(e) == o.norm());
      CHECK(members.count(-e) == 1);
      for (const auto& g : rs.generators()) CHECK(members.count(g.apply(e)) == 1);
    }
  }
}

TEST_CASE("maximal vectors") {
  const auto table = OrbitTable::enumerate(RootSystem::f4(), 24);
  const OrderingVector xi;
  CHECK(max_vector(table.at({1, 0}), xi) == vec({1, 0, 0, 0}));
  CHECK(max_vector(table.at({3, 0}), xi) == vec({1.5, 0.5, 0.5, 0.5}));
  CHECK(max_vector(table.at({6, 0}), xi) == vec({2, 1, 1, 0}));
  CHECK(max_vector(table.at({4, 0}), xi) == vec({2, 0, 0, 0}));
  for (const auto& o : table.orbits()) {
    for (const auto& e : o.elements) CHECK(height(e, xi) <= height(o.max_vector, xi));
  }
}

TEST_CASE("semiorbits and Weyl vectors") {
  const auto table = OrbitTable::enumerate(RootSystem::f4(), 24);
  const OrderingVector xi;
  const auto s1 = semiorbit_split(table.at({1, 0}), xi);
  CHECK(s1.positive.size() == 12);
  const auto s2 = semiorbit_split(table.at({2, 0}), xi);
  CHECK(s2.positive.size() == 12);
  CHECK(std::count(s2.positive.begin(), s2.positive.end(), vec({1, 1, 0, 0})) == 1);
  CHECK(std::count(s2.positive.begin(), s2.positive.end(), vec({1, -1, 0, 0})) == 1);
  CHECK_THROWS_AS(semiorbit_split(table.null_orbit(), xi), Error);
  CHECK(weyl_vector(table.at({1, 0}), xi) == vec({5, 1, 1, 1}));
  CHECK(weyl_vector(table.at({2, 0}), xi) == vec({6, 4, 2, 0}));
}

TEST_CASE("table ordering follows the height of the maximal vector") {
  const auto table = OrbitTable::enumerate(RootSystem::f4(), 56);
  CHECK(table[0].norm() == 0);
  for (std::size_t i = 1; i + 1 < table.size(); ++i)
    CHECK(height(table[i].max_vector, table.xi()) < height(table[i + 1].max_vector, table.xi()));
}
