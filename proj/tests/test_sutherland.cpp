#include <set>

#include "fixtures.hpp"
#include "trigweyl/error.hpp"
#include "trigweyl/sutherland.hpp"

using namespace trigweyl;
using fixtures::poly;

namespace {

Pipeline& pl() { return fixtures::pipeline(56); }

OperatorSpec op_at(const std::vector<Rational>& gamma) { return make_operator(pl().metric(), pl().r(), gamma); }

// The printed basis-form metric, parsed from the embedded table.
Matrix<Poly> printed_metric() {
  const auto& b = pl().basis().basis;
  Matrix<Poly> g(4, std::vector<Poly>(4, Poly(4)));
  for (const auto& row : reference_data().metric_basis_form) {
    const auto comma = row.key.find(',');
    const auto m = OrbitLabel::parse(row.key.substr(0, comma)), n = OrbitLabel::parse(row.key.substr(comma + 1));
    const auto i = std::find(b.begin(), b.end(), m) - b.begin(), j = std::find(b.begin(), b.end(), n) - b.begin();
    g[i][j] = g[j][i] = parse_poly(row.text, b);
  }
  return g;
}

}  // namespace

TEST_CASE("r coefficients") {
  const auto& r = pl().r();
  CHECK(r.r[0][0] == poly("-5T1 - 24"));
  CHECK(r.r[1][0] == poly("-6T1"));
  CHECK(r.r[1][3] == poly("-24T1^2 - 18T6 + 48T3 + 96T2 + 192T1 + 576"));
  CHECK(diff_r(r, pl().basis(), reference_data()).clean());
  const auto& f = pl().factorization();
  CHECK(exact_divide(f.P[0] * poly("-5T1 - 24"), f.P[0], TermOrder::graded(4)) == poly("-5T1 - 24"));
}

TEST_CASE("operator on constants and on T1") {
  const auto op0 = op_at({0, 0});
  CHECK(apply_D(op0, Poly::constant(4, 7)).is_zero());
  CHECK(apply_D(op0, poly("T1")) == poly("13/2T1 + 12"));
  // -sum_m d_m g^{m1} from the printed metric, differentiated here.
  const auto g = printed_metric();
  Poly expected(4);
  for (std::size_t m = 0; m < 4; ++m) expected -= partial(g[m][0], m);
  CHECK(apply_D(op0, poly("T1")) == expected);
}

TEST_CASE("operator is linear") {
  const auto op = op_at({Rational(1, 3), Rational(1, 5)});
  const Poly p = poly("T1^2 + 3T2"), q = poly("T6 - T1T3");
  CHECK(apply_D(op, p * Rational(2) + q) == apply_D(op, p) * Rational(2) + apply_D(op, q));
}

TEST_CASE("flag spaces") {
  const FlagSpace v0({1, 2, 3, 4}, 0);
  CHECK(v0.dim() == 1);
  const FlagSpace v4({1, 2, 3, 4}, 4);
  CHECK(v4.dim() == 12);  // weighted compositions of 0..4 with parts 1,2,3,4
  const FlagSpace v12({2, 2, 3, 4}, 12);
  CHECK(v12.dim() == 89);
  const auto op = op_at({0, 0});
  const auto m0 = flag_matrix(op, v0);
  CHECK(m0.size() == 1);
  CHECK(m0[0][0] == 0);
}

TEST_CASE("the printed grading is not invariant at level 2") {
  const auto op = op_at({Rational(1, 3), Rational(1, 5)});
  CHECK_NOTHROW(flag_matrix(op, FlagSpace(graded_flag_weights(pl().basis()), 1)));
  try {
    flag_matrix(op, FlagSpace(graded_flag_weights(pl().basis()), 2));
    FAIL("expected FlagViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FlagViolation);
    CHECK(std::string(e.what()).find("T3") != std::string::npos);
  }
}

TEST_CASE("chamber grading") {
  CHECK(chamber_flag_weights(pl().basis(), pl().table()) == std::vector<std::int64_t>{2, 2, 3, 4});
}

TEST_CASE("spectra at low level") {
  const auto order = asymptotic_order(pl().basis(), pl().table());
  const auto sp0 = spectrum(op_at({1, 1}), FlagSpace({1, 2, 3, 4}, 0), order);
  REQUIRE(sp0.size() == 1);
  CHECK(*sp0[0].exact == 0);
  CHECK(*sp0[0].eigenfunction == Poly::constant(4, 1));
  const auto sp1 = spectrum(op_at({0, 0}), FlagSpace({1, 2, 3, 4}, 1), order);
  std::multiset<Rational> ev;
  for (const auto& e : sp1) ev.insert(*e.exact);
  CHECK(ev == std::multiset<Rational>{0, Rational(13, 2)});
}

TEST_CASE("spectrum at level 12: exact eigenpairs, nesting") {
  const auto order = asymptotic_order(pl().basis(), pl().table());
  const auto weights = chamber_flag_weights(pl().basis(), pl().table());
  for (const auto& gamma : std::vector<std::vector<Rational>>{{Rational(1, 3), Rational(1, 5)}, {-2, 7}}) {
    const auto op = op_at(gamma);
    std::multiset<Rational> prev;
    for (std::int64_t N : {6, 9, 12}) {
      const FlagSpace space(weights, N);
      const auto sp = spectrum(op, space, order);
      CHECK(sp.size() == space.dim());
      std::multiset<Rational> cur;
      for (const auto& e : sp) {
        REQUIRE(e.exact);
        REQUIRE(e.eigenfunction);
        cur.insert(*e.exact);
        CHECK(apply_D(op, *e.eigenfunction) == *e.eigenfunction * *e.exact);
      }
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = cur;
    }
  }
}

TEST_CASE("independent eigenvalue check through the characteristic polynomial") {
  const auto op = op_at({Rational(1, 3), Rational(1, 5)});
  const FlagSpace space(chamber_flag_weights(pl().basis(), pl().table()), 6);
  const auto M = flag_matrix(op, space);
  const auto cp = characteristic_polynomial(transpose(M));
  for (const auto& e : spectrum(op, space, asymptotic_order(pl().basis(), pl().table())))
    CHECK(evaluate_univariate(cp, *e.exact) == 0);
}

TEST_CASE("defective blocks are reported, not hidden") {
  const auto op = op_at({1, 1});
  const FlagSpace space(chamber_flag_weights(pl().basis(), pl().table()), 12);
  const auto sp = spectrum(op, space, asymptotic_order(pl().basis(), pl().table()));
  std::size_t without = 0;
  for (const auto& e : sp) {
    if (!e.eigenfunction) {
      ++without;
      CHECK(e.note.find("DefectiveBlock") != std::string::npos);
    } else {
      CHECK(apply_D(op, *e.eigenfunction) == *e.eigenfunction * *e.exact);
    }
  }
  CHECK(without > 0);
}

TEST_CASE("potential constants") {
  const auto& pd = pl().potential(1);
  CHECK(pd.rho[0][0] == 1);
  CHECK(pd.C[0][0] == -28);
  CHECK(pd.rho[1][1] == 2);
  CHECK(pd.C[1][1] == -56);
  CHECK(pd.rho[0][1] == 0);
  CHECK(pd.C[0][1] == -36);
  CHECK(pd.rho[1][0] == 0);
  CHECK(pd.C[1][0] == -36);
  for (const auto& row : pd.residual)
    for (auto x : row) CHECK(x < 1e-8L);
  // R_ab P_b is the exact numerator.
  const auto& f = pl().factorization();
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Poly numerator(4);
      for (std::size_t n = 0; n < 4; ++n) numerator += pl().r().r[a][n] * partial(f.P[b], n);
      CHECK(pd.R[a][b].num * f.P[b] == numerator * pd.R[a][b].den);
    }
}

TEST_CASE("potential W") {
  const auto& pd = pl().potential(1);
  std::mt19937_64 gen(4);
  const auto pts = sample_points(pl().table().root_system(), 10, 99);
  for (const auto& x : pts) {
    CHECK(std::fabs(potential_W(x, {Rational(1, 2), Rational(1, 2)}, pd, pl().basis(), pl().table())) < 1e-8L);
    // Closed form against an independent sum over positive roots.
    long double s1 = 0, s2 = 0;
    for (std::size_t a = 0; a < 2; ++a)
      for (const auto& e : pl().table().at(pd.root_orbits[a]).elements) {
        if (height(e, pl().table().xi()) < 0) continue;
        long double ph = 0;
        for (std::size_t i = 0; i < 4; ++i) ph += static_cast<long double>(e[i]) / kScale * x[i];
        (a == 0 ? s1 : s2) += 1 / (std::sin(ph / 2) * std::sin(ph / 2));
      }
    // gamma = (1, 1): W = 1/4 * 3/4 * (R11 + R12 + R21 + R22) = 3/16 (s1 + 2 s2 - 156)
    const long double expected = 3.0L / 16 * (s1 + 2 * s2 - 28 - 36 - 36 - 56);
    const long double w = potential_W(x, {1, 1}, pd, pl().basis(), pl().table());
    CHECK(std::fabs(w - expected) < 1e-8L * std::max<long double>(1, std::fabs(expected)));
  }
  const std::vector<long double> wall(4, 0);
  CHECK_THROWS_AS(potential_W(wall, {1, 1}, pd, pl().basis(), pl().table()), Error);
}

TEST_CASE("W grows toward a wall") {
  const auto& pd = pl().potential(1);
  long double prev = 0;
  for (long double eps : {1e-1L, 1e-2L, 1e-3L}) {
    // Approach the wall of the short root e4 along x4 -> 0.
    const std::vector<long double> x{2.9L, 1.7L, 0.8L, eps};
    const long double w = potential_W(x, {1, 0}, pd, pl().basis(), pl().table());
    CHECK(w > prev);
    prev = w;
  }
}
