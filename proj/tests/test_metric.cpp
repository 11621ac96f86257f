#include "fixtures.hpp"
#include "trigweyl/error.hpp"
#include "trigweyl/metric.hpp"

using namespace trigweyl;
using fixtures::poly;

namespace {

// g^{mn}(x) from independent finite differences of the orbit sums.
long double fd_metric(const Orbit& a, const Orbit& b, std::vector<long double> x) {
  const long double h = 1e-6L;
  long double sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    const long double da = (fixtures::orbit_value(a, xp) - fixtures::orbit_value(a, xm)) / (2 * h);
    const long double db = (fixtures::orbit_value(b, xp) - fixtures::orbit_value(b, xm)) / (2 * h);
    sum += da * db;
  }
  return sum;
}

const std::vector<Rational> kAtOrigin{24, 24, 96, 96};

}  // namespace

TEST_CASE("inverse metric entries") {
  auto& pl = fixtures::pipeline(24);
  const auto& im = pl.metric();
  CHECK(to_text(im.orbit_form[0][0]) == "-T4 - T3 + 4T1 + 24");
  CHECK(im.poly_form[0][1] == poly("-T1T2 + 3T3 + 12T1"));
  CHECK(evaluate(im.poly_form[0][0], kAtOrigin) == 0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(im.poly_form[i][j] == im.poly_form[j][i]);
      CHECK(im.poly_form[i][j] == to_poly(im.orbit_form[i][j], pl.basis()));
      CHECK(metric_entry_by_pairing(pl.table(), im.basis[i], im.basis[j]) == im.orbit_form[i][j]);
    }
  CHECK(diff_metric(im, reference_data()).clean());
}

TEST_CASE("inverse metric against finite differences") {
  auto& pl = fixtures::pipeline(24);
  const auto& im = pl.metric();
  std::mt19937_64 gen(2);
  for (int t = 0; t < 5; ++t) {
    const auto x = fixtures::random_point(gen);
    const auto values = fixtures::basis_point(pl.basis(), pl.table(), x);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const long double fd = fd_metric(pl.table().at(im.basis[i]), pl.table().at(im.basis[j]), x);
        const long double ev = evaluate_numeric<long double>(im.poly_form[i][j], values);
        CHECK(std::fabs(fd - ev) < 1e-5L * std::max<long double>(1, std::fabs(ev)));
      }
  }
}

TEST_CASE("determinant factorization") {
  auto& pl = fixtures::pipeline(56);
  const auto& f = pl.factorization();
  CHECK(f.constant == Rational(1, 4));
  CHECK(f.det == f.P[0] * f.P[1] * f.constant);
  CHECK(evaluate(f.det, kAtOrigin) == 0);
  CHECK(evaluate(f.P[1], kAtOrigin) == 0);
  CHECK(f.P[0].coefficient(Monomial{}) == 110592);
  CHECK(f.P[0].coefficient(Monomial{5}) == 16);
  CHECK(f.P[0].coefficient(Monomial{0, 0, 3}) == 4);
  const auto ref = reference_data();
  CHECK(f.P[0] == parse_poly(ref.root_factors[0].text, pl.basis().basis));
}

TEST_CASE("printed second factor differs only in the garbled line") {
  auto& pl = fixtures::pipeline(56);
  const auto report = diff_factors(pl.factorization(), pl.basis(), reference_data());
  const auto& p2 = *std::find_if(report.entries.begin(), report.entries.end(), [](const auto& e) { return e.item == "P2"; });
  CHECK(p2.status == "flagged");
  // The three repeated printed terms carry exactly the missing coefficient mass.
  const Poly& P2 = pl.factorization().P[1];
  CHECK(P2.coefficient(Monomial{1, 1}) + 88128 + 45888 == 5000064);
  CHECK(P2.coefficient(Monomial{1, 0, 0, 1}) + 108 == -221076);
}

TEST_CASE("asymptotics") {
  auto& pl = fixtures::pipeline(56);
  const auto& f = pl.factorization();
  const auto l1 = asymptotic_report(f.P[0], pl.basis(), pl.table());
  CHECK(l1.monomial == Monomial{2, 0, 2});
  CHECK(l1.coefficient == -1);
  CHECK(l1.frequency == fixtures::vec({5, 1, 1, 1}));
  const auto l2 = asymptotic_report(f.P[1], pl.basis(), pl.table());
  CHECK(l2.monomial == Monomial{0, 2, 0, 2});
  CHECK(l2.frequency == fixtures::vec({6, 4, 2, 0}));
  CHECK(asymptotic_report(Poly::variable(4, 0), pl.basis(), pl.table()).frequency == fixtures::vec({1, 0, 0, 0}));
}

TEST_CASE("sine products numerically") {
  auto& pl = fixtures::pipeline(56);
  const auto& f = pl.factorization();
  std::mt19937_64 gen(8);
  for (int t = 0; t < 100; ++t) {
    const auto x = fixtures::random_point(gen);
    const auto values = fixtures::basis_point(pl.basis(), pl.table(), x);
    for (std::size_t a = 0; a < 2; ++a) {
      long double prod = -1;
      for (const auto& e : pl.table().at(f.root_orbits[a]).elements) {
        if (height(e, pl.table().xi()) < 0) continue;
        long double ph = 0;
        for (std::size_t i = 0; i < 4; ++i) ph += static_cast<long double>(e[i]) / kScale * x[i];
        prod *= 4 * std::sin(ph / 2) * std::sin(ph / 2);
      }
      const long double P = evaluate_numeric<long double>(f.P[a], values);
      CHECK(std::fabs(P - prod) / std::max<long double>(1, std::fabs(P)) < 1e-6L);
    }
  }
}

TEST_CASE("walls") {
  const auto rs = RootSystem::f4();
  const std::vector<long double> zero(4, 0);
  CHECK(wall_check(rs, zero).size() == 48);
  const std::vector<long double> x{2 * std::numbers::pi_v<long double>, 0, 0, 0};
  const auto hits = wall_check(rs, x);
  CHECK(std::any_of(hits.begin(), hits.end(), [](const WallHit& h) { return h.root == fixtures::vec({1, 0, 0, 0}) && h.n == 1; }));
  auto& pl = fixtures::pipeline(56);
  const std::vector<long double> inside{0.9L, 0.3L, 0.2L, 0.1L};
  CHECK(wall_check(rs, inside).empty());
  CHECK(std::fabs(jacobian_det(pl.basis(), pl.table(), inside)) > 0);
}
