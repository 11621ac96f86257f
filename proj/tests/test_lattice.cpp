#include "fixtures.hpp"
#include "trigweyl/error.hpp"
#include "trigweyl/lattice.hpp"

using namespace trigweyl;
using fixtures::vec;

TEST_CASE("inner products in the orthonormal basis") {
  CHECK(inner(vec({1, 0, 0, 0}), vec({1, 0, 0, 0})) == 1);
  const auto f1 = vec({0.5, 0.5, 0.5, 0.5});
  CHECK(inner(f1, f1) == 1);
  CHECK(inner(vec({1, 1, 0, 0}), vec({1, -1, 0, 0})) == 0);
  CHECK(inner(vec({0.5, 0, 0, 0}), vec({0.5, 0, 0, 0})) == Rational(1, 4));
  CHECK_THROWS_AS(inner(vec({1, 0, 0, 0}), vec({1, 0, 0})), Error);
}

TEST_CASE("squared norms") {
  CHECK(norm_sq(vec({1, 0, 0, 0})) == 1);
  CHECK(norm_sq(vec({0.5, 0.5, 0.5, 0.5})) == 1);
  CHECK(norm_sq(vec({3, 2, 1, 1})) == 15);
}

TEST_CASE("reflections") {
  const auto e1 = vec({1, 0, 0, 0});
  CHECK(reflect(e1, e1) == vec({-1, 0, 0, 0}));
  CHECK(reflect(vec({0, 1, 0, 0}), e1) == vec({0, 1, 0, 0}));
  CHECK(reflect(e1, vec({0.5, 0.5, 0.5, 0.5})) == vec({0.5, -0.5, -0.5, -0.5}));
  CHECK_THROWS_AS(reflect(e1, LatticeVector(4)), Error);
}

TEST_CASE("reflections preserve norm and are involutions on random lattice points") {
  const auto rs = RootSystem::f4();
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> c(-5, 5), p(0, 1);
  for (int t = 0; t < 500; ++t) {
    const int par = p(gen);
    const auto v = vec({c(gen) + 0.5 * par, c(gen) + 0.5 * par, c(gen) + 0.5 * par, c(gen) + 0.5 * par});
    REQUIRE(v.in_root_lattice());
    for (const auto& r : rs.roots()) {
      const auto w = reflect(v, r);
      CHECK(norm_sq(w) == norm_sq(v));
      CHECK(reflect(w, r) == v);
      CHECK(w.in_root_lattice());
    }
  }
}

TEST_CASE("root lattice membership by parity") {
  CHECK(vec({1, 0, 0, 0}).in_root_lattice());
  CHECK(vec({0.5, -0.5, 0.5, 1.5}).in_root_lattice());
  CHECK_FALSE(vec({0.5, 0, 0, 0}).in_root_lattice());
  CHECK_FALSE(vec({0.25, 0.25, 0.25, 0.25}).in_root_lattice());
}

TEST_CASE("heights with the default ordering vector") {
  const OrderingVector xi;
  CHECK(height(LatticeVector(4), xi) == 0);
  CHECK(height(vec({1, 0, 0, 0}), xi) > height(vec({0, 1, 0, 0}), xi));
  CHECK(height(vec({-0.5, 0.5, 0.5, 0.5}), xi) < 0);
  CHECK(satisfies_chamber_inequalities(xi));
  CHECK_FALSE(satisfies_chamber_inequalities(OrderingVector({4, 3, 2, 1})));
}

TEST_CASE("text form") {
  CHECK(to_text(vec({2, 1, 1, 0})) == "2e1 + e2 + e3");
  CHECK(to_text(vec({0.5, -0.5, 0, 0})) == "1/2e1 - 1/2e2");
  CHECK(to_text(LatticeVector(4)) == "0");
}
