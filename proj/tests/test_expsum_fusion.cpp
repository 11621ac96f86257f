#include <complex>
#include <map>

#include "fixtures.hpp"
#include "trigweyl/error.hpp"
#include "trigweyl/expsum.hpp"

using namespace trigweyl;
using fixtures::vec;

namespace {

const OrbitTable& table() { return fixtures::pipeline(24).table(); }

// C^k_mn by counting pairs (beta, beta') with beta + beta' = alpha_max(k),
// written without the library's fusion code.
std::map<OrbitLabel, Rational> brute_fusion(const OrbitLabel& m, const OrbitLabel& n) {
  std::map<LatticeVector, long> sums;
  for (const auto& a : table().at(m).elements)
    for (const auto& b : table().at(n).elements) ++sums[a + b];
  std::map<OrbitLabel, Rational> out;
  for (const auto& o : table().orbits()) {
    auto it = sums.find(o.max_vector);
    if (it != sums.end()) out[o.label] = it->second;
  }
  return out;
}

}  // namespace

TEST_CASE("orbit sums") {
  const auto t0 = exp_sum_of(table().null_orbit());
  CHECK(t0.size() == 1);
  CHECK(t0.coefficient(LatticeVector(4)) == 1);
  const std::vector<double> zero(4, 0.0);
  CHECK(evaluate<double>(exp_sum_of(table().at({1, 0})), zero).real() == doctest::Approx(24));
}

TEST_CASE("multiplication") {
  const auto t1 = exp_sum_of(table().at({1, 0}));
  CHECK(multiply(exp_sum_of(table().null_orbit()), t1) == t1);
  const std::vector<double> zero(4, 0.0);
  CHECK(evaluate<double>(multiply(t1, t1), zero).real() == doctest::Approx(576));
  CHECK(multiply(ExpSum::term(vec({1, 0, 0, 0})), ExpSum::term(vec({-1, 0, 0, 0}))) ==
        ExpSum::constant(4, 1));
}

TEST_CASE("evaluation") {
  const double pi = std::numbers::pi;
  const std::vector<double> x{pi, 0, 0, 0};
  const auto v = evaluate<double>(ExpSum::term(vec({1, 0, 0, 0})), x);
  CHECK(v.real() == doctest::Approx(-1));
  CHECK(v.imag() == doctest::Approx(0).epsilon(1e-12));
  const std::vector<double> allpi(4, pi);
  CHECK(evaluate<double>(exp_sum_of(table().at({2, 0})), allpi).real() == doctest::Approx(24));
}

TEST_CASE("products evaluate to products of values") {
  std::mt19937_64 gen(11);
  const auto a = exp_sum_of(table().at({3, 0}));
  const auto b = exp_sum_of(table().at({5, 0}));
  const auto ab = multiply(a, b);
  for (int t = 0; t < 20; ++t) {
    const auto xl = fixtures::random_point(gen);
    const std::vector<double> x(xl.begin(), xl.end());
    const auto lhs = evaluate<double>(ab, x);
    const auto rhs = evaluate<double>(a, x) * evaluate<double>(b, x);
    CHECK(std::abs(lhs - rhs) < 1e-9 * 96 * 192);
  }
}

TEST_CASE("decomposition") {
  CHECK(decompose(exp_sum_of(table().at({5, 0})), table()).terms == std::map<OrbitLabel, Rational>{{{5, 0}, 1}});
  const auto t1t2 = multiply(exp_sum_of(table().at({1, 0})), exp_sum_of(table().at({2, 0})));
  CHECK(to_text(decompose(t1t2, table())) == "T5 + 3T3 + 6T1");
  CHECK_THROWS_AS(decompose(ExpSum::term(vec({1, 0, 0, 0})), table()), Error);
  try {
    decompose(ExpSum::term(vec({1, 0, 0, 0})), table());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInvariant);
  }
  const auto big = multiply(exp_sum_of(table().at({24, 0})), exp_sum_of(table().at({24, 0})));
  CHECK_THROWS_AS(decompose(big, table()), OrbitOutOfTable);
}

TEST_CASE("fusion of T1 with itself and with T0") {
  CHECK(to_text(fusion(table(), {1, 0}, {1, 0})) == "T4 + 2T3 + 6T2 + 8T1 + 24");
  for (const auto& o : table().orbits()) {
    InvariantCombo expected;
    expected.add(o.label, 1);
    CHECK(fusion(table(), {0, 0}, o.label) == expected);
  }
}

TEST_CASE("fusion coefficients agree with brute-force pair counts") {
  std::vector<OrbitLabel> small;
  for (const auto& o : table().orbits())
    if (o.norm() <= 6) small.push_back(o.label);
  for (const auto& m : small)
    for (const auto& n : small) {
      CAPTURE(m.to_string());
      CAPTURE(n.to_string());
      CHECK(fusion(table(), m, n).terms == brute_fusion(m, n));
      CHECK(fusion(table(), m, n) == fusion_by_expansion(table(), m, n));
    }
}

TEST_CASE("triangle bound and unit top coefficient for norms up to 12") {
  const auto& t = fixtures::pipeline(56).table();
  std::vector<const Orbit*> small;
  for (const auto& o : t.orbits())
    if (o.norm() > 0 && o.norm() <= 12) small.push_back(&o);
  for (const auto* m : small)
    for (const auto* n : small) {
      const auto c = fusion(t, m->label, n->label);
      const auto top = t.index_of(m->max_vector + n->max_vector);
      REQUIRE(top);
      CHECK(c.coefficient(t[*top].label) == 1);
      for (const auto& [k, coef] : c.terms) {
        const double lo = std::fabs(std::sqrt(m->norm()) - std::sqrt(n->norm()));
        const double hi = std::sqrt(m->norm()) + std::sqrt(n->norm());
        CHECK(std::sqrt(k.norm) >= lo - 1e-12);
        CHECK(std::sqrt(k.norm) <= hi + 1e-12);
      }
    }
}

TEST_CASE("expand inverts decompose") {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<std::size_t> pick(0, table().size() - 1);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  for (int t = 0; t < 200; ++t) {
    InvariantCombo c;
    for (int k = 0; k < 3; ++k) c.add(table()[pick(gen)].label, make_rational(num(gen), den(gen)));
    std::erase_if(c.terms, [](const auto& kv) { return kv.second == 0; });
    const auto s = expand(c, table());
    CHECK(s.is_invariant(table()));
    CHECK(decompose(s, table()) == c);
  }
}

TEST_CASE("fusion table memoizes symmetrically") {
  FusionTable ft(table());
  const auto a = ft.get({2, 0}, {3, 0});
  CHECK(ft.get({3, 0}, {2, 0}) == a);
  CHECK(ft.size() == 1);
}
