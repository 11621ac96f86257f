#include "fixtures.hpp"
#include <algorithm>
#include "trigweyl/chevalley.hpp"
#include "trigweyl/error.hpp"

using namespace trigweyl;
using fixtures::poly;

namespace {
const std::vector<Rational> kAtOrigin{24, 24, 96, 96};
}

TEST_CASE("basis discovery at norm 24") {
  auto& pl = fixtures::pipeline(24);
  const auto& b = pl.basis();
  CHECK(b.basis == std::vector<OrbitLabel>{{1, 0}, {2, 0}, {3, 0}, {6, 0}});
  CHECK(express({0, 0}, b) == Poly::constant(4, 1));
  CHECK(express({1, 0}, b) == Poly::variable(4, 0));
  CHECK(express({4, 0}, b) == poly("T1^2 - 2T3 - 6T2 - 8T1 - 24"));
  CHECK(express({5, 0}, b) == poly("T2T1 - 3T3 - 6T1"));
  CHECK_THROWS_AS(express({25, 0}, b), Error);
}

TEST_CASE("the norm-24 expression") {
  const auto& b = fixtures::pipeline(24).basis();
  const Poly& t24 = express({24, 0}, b);
  const auto& rows = reference_data().expressions;
  const auto row = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return r.key == "24"; });
  REQUIRE(row != rows.end());
  CHECK(t24 == poly(row->text));
  CHECK(t24.size() == 28);
  CHECK(t24.coefficient(Monomial{4}) == 12);
  CHECK(t24.coefficient(Monomial{0, 0, 0, 2}) == 1);
  CHECK(t24.coefficient(Monomial{}) == 4320);
  CHECK(t24.coefficient(Monomial{0, 1}) == 1104);
}

TEST_CASE("every expression reproduces the orbit sum") {
  auto& pl = fixtures::pipeline(24);
  const auto& b = pl.basis();
  for (const auto& o : pl.table().orbits()) {
    CAPTURE(o.label.to_string());
    CHECK(verify_expression(o.label, b, pl.table()));
    CHECK(evaluate(express(o.label, b), kAtOrigin) == static_cast<long>(o.cardinal()));
  }
  Poly perturbed = express({7, 0}, b) + Poly::constant(4, 1);
  CHECK_FALSE(verify_expression({7, 0}, perturbed, b, pl.table()));
}

TEST_CASE("expressions agree numerically with independent orbit sums") {
  auto& pl = fixtures::pipeline(24);
  const auto& b = pl.basis();
  std::mt19937_64 gen(21);
  for (int t = 0; t < 5; ++t) {
    const auto x = fixtures::random_point(gen);
    const auto values = fixtures::basis_point(b, pl.table(), x);
    for (const auto& o : pl.table().orbits()) {
      const long double direct = fixtures::orbit_value(o, x);
      const long double viapoly = evaluate_numeric<long double>(express(o.label, b), values);
      CHECK(std::fabs(direct - viapoly) < 1e-7L * std::max<long double>(1, std::fabs(direct)) + 1e-6L);
    }
  }
}

TEST_CASE("printed expressions match, the line-break row included") {
  const auto report = diff_expressions(fixtures::pipeline(24).basis(), reference_data());
  CHECK(report.count("mismatch") == 0);
  CHECK(report.entries.size() == 24);  // basis row plus 23 printed rows
}

TEST_CASE("reduced verification up to norm 56") {
  auto& pl = fixtures::pipeline(56);
  const auto& b = pl.basis();
  ReducedVerifier v(pl.table(), b.basis);
  for (const auto& o : pl.table().orbits()) CHECK(v.verify(o.label, express(o.label, b)));
  const OrbitLabel last = pl.table().orbits().back().label;
  CHECK_FALSE(v.verify(last, express(last, b) + Poly::variable(4, 2)));
  CHECK_THROWS_AS(v.monomial_value(Monomial{0, 0, 0, 4}), OrbitOutOfTable);
}

TEST_CASE("a too small table reports the norm it needs") {
  const auto table = OrbitTable::enumerate(RootSystem::f4(), 5);
  FusionTable ft(table);
  try {
    ft.get({5, 0}, {5, 0});
    FAIL("expected OrbitOutOfTable");
  } catch (const OrbitOutOfTable& e) {
    CHECK(e.required_norm() > 5);
  }
}

TEST_CASE("swapping a basis variable keeps every expression valid") {
  auto& pl = fixtures::pipeline(24);
  const auto swapped = swap_basis_variable(pl.basis(), {6, 0}, {7, 0});
  CHECK(swapped.basis == std::vector<OrbitLabel>{{1, 0}, {2, 0}, {3, 0}, {7, 0}});
  for (const auto& o : pl.table().orbits()) CHECK(verify_expression(o.label, swapped, pl.table()));
}

TEST_CASE("deterministic construction") {
  const auto table = OrbitTable::enumerate(RootSystem::f4(), 24);
  FusionTable f1(table), f2(table);
  const auto a = build_basis(table, f1), b = build_basis(table, f2);
  CHECK(a.expressions == b.expressions);
  CHECK(a.provenance == b.provenance);
}
