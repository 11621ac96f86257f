#include "fixtures.hpp"
#include "trigweyl/error.hpp"
#include "trigweyl/metric.hpp"
#include "trigweyl/polynomial.hpp"
#include "trigweyl/poly_text.hpp"

using namespace trigweyl;

namespace {

const std::vector<OrbitLabel> kVars{{1, 0}, {2, 0}, {3, 0}, {6, 0}};
const std::vector<std::string> kNames{"T1", "T2", "T3", "T6"};

Poly P(const std::string& s) { return parse_poly(s, kVars); }
std::string S(const Poly& p) {
  auto& pl = fixtures::pipeline(24);
  return to_text(p, kNames, asymptotic_order(pl.basis(), pl.table()));
}

Poly random_poly(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> e(0, 3), c(-20, 20), n(1, 6);
  Poly p(4);
  for (int t = n(gen); t > 0; --t) {
    Monomial m{};
    for (std::size_t i = 0; i < 4; ++i) m[i] = static_cast<std::uint16_t>(e(gen));
    p.add_term(m, make_rational(c(gen), 1 + (t % 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("ring arithmetic") {
  CHECK((P("T1 + 1") * P("T1 - 1")) == P("T1^2 - 1"));
  const Poly z = P("T1 + T2") * Poly(4);
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
  CHECK(P("T1^2 - 2T3 - 6T2 - 8T1 - 24") + P("2T3 + 6T2 + 8T1 + 24") == P("T1^2"));
}

TEST_CASE("formal derivatives") {
  CHECK(partial(P("T1^2"), 0) == P("2T1"));
  CHECK(partial(P("-T1T2 + 3T3 + 12T1"), 1) == P("-T1"));
  CHECK(partial(P("7"), 2).is_zero());
}

TEST_CASE("derivation rule and evaluation homomorphism on random polynomials") {
  std::mt19937_64 gen(5);
  const std::vector<Rational> point{Rational(3, 2), -2, Rational(1, 3), 5};
  for (int t = 0; t < 100; ++t) {
    const Poly p = random_poly(gen), q = random_poly(gen);
    for (std::size_t v = 0; v < 4; ++v) CHECK(partial(p * q, v) == partial(p, v) * q + p * partial(q, v));
    CHECK(evaluate(p * q, point) == evaluate(p, point) * evaluate(q, point));
    CHECK(evaluate(p + q, point) == evaluate(p, point) + evaluate(q, point));
  }
}

TEST_CASE("exact division") {
  const auto order = TermOrder::graded(4);
  CHECK(exact_divide(P("T1^2 - 1"), P("T1 - 1"), order) == P("T1 + 1"));
  CHECK_THROWS_AS(exact_divide(P("T1"), P("T2"), order), Error);
  CHECK_THROWS_AS(exact_divide(P("T1"), Poly(4), order), Error);
  std::mt19937_64 gen(9);
  for (int t = 0; t < 50; ++t) {
    const Poly a = random_poly(gen), b = random_poly(gen);
    if (b.is_zero()) continue;
    const Poly q = exact_divide(a * b, b, order);
    CHECK(q * b == a * b);
  }
}

TEST_CASE("leading terms") {
  const auto [m, c] = leading_term(P("T1 + T2"), TermOrder::graded(4));
  CHECK(m == Monomial{0, 1});
  CHECK(c == 1);
  CHECK_THROWS_AS(leading_term(Poly(4), TermOrder::graded(4)), Error);
}

TEST_CASE("evaluation at the origin values") {
  const std::vector<Rational> at0{24, 24, 96, 96};
  CHECK(evaluate(P("T1^2 - 2T3 - 6T2 - 8T1 - 24"), at0) == 24);
  CHECK(evaluate(Poly(4), at0) == 0);
}

TEST_CASE("paper-style text round trip") {
  const std::string text = "T1^2 - 2T3 - 6T2 - 8T1 - 24";
  CHECK(S(P(text)) == text);
  CHECK(S(P("-3/2T1 + T6^2")) == "T6^2 - 3/2T1");
  CHECK(P("2*T1*T3^2") == P("2T1T3^2"));
  CHECK(P("−T1") == P("-T1"));
  CHECK(P("T1 + T1") == P("2T1"));
  CHECK_THROWS_AS(P("T1 +* 2"), Error);
  CHECK_THROWS_AS(P("T5"), Error);
  const auto terms = parse_terms("88128T1T2 + 45888T1T2");
  CHECK(terms.size() == 2);
}

TEST_CASE("combination text") {
  const auto c = parse_combo("-T4 - T3 + 4T1 + 24");
  CHECK(c.coefficient({0, 0}) == 24);
  CHECK(to_text(c) == "-T4 - T3 + 4T1 + 24");
  CHECK(invariant_name({9, 1}) == "T_{9,1}");
  CHECK(parse_combo("T_{9,1} - 2T{9,2}").coefficient({9, 2}) == -2);
}

TEST_CASE("substitution") {
  const std::vector<Poly> images{P("T1 + 1"), P("T2"), P("T3"), P("T6")};
  CHECK(substitute(P("T1^2"), images) == P("T1^2 + 2T1 + 1"));
}
