#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trigweyl/rational.hpp"

namespace trigweyl {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector; entries beyond the polynomial's variable count stay zero.
using Monomial = std::array<std::uint16_t, kMaxVars>;

/// Total order on monomials: compare sum(w_i n_i) first, then exponents
/// lexicographically from the first variable. With positive weights this is a
/// multiplicative well-order.
class TermOrder {
 public:
  explicit TermOrder(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {}
  /// Grading by (1, 2, ..., k).
  static TermOrder graded(std::size_t nvars);

  std::span<const std::int64_t> weights() const noexcept { return weights_; }
  std::int64_t weight(const Monomial& m) const;
  /// True when a sorts strictly above b.
  bool greater(const Monomial& a, const Monomial& b) const;

 private:
  std::vector<std::int64_t> weights_;
};

/// Sparse polynomial with rational coefficients; zero terms are never stored.
class Poly {
 public:
  using Map = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(std::size_t nvars, const Monomial& m, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Map& terms() const noexcept { return terms_; }

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);
  /// Largest total degree (0 for the zero polynomial).
  int degree() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  /// Terms ordered from the top of `order` downward.
  std::vector<std::pair<Monomial, Rational>> sorted_terms(const TermOrder& order) const;

 private:
  std::size_t nvars_ = 0;
  Map terms_;
};

Poly pow(const Poly& p, unsigned k);

/// Formal derivative with respect to variable `var`.
Poly partial(const Poly& p, std::size_t var);

/// Maximal term under `order`. Throws ZeroPolynomial.
std::pair<Monomial, Rational> leading_term(const Poly& p, const TermOrder& order);

/// Quotient q with q * den == num, by leading-term reduction. Throws
/// NotDivisible carrying the leading term of the remainder, or ZeroPolynomial
/// for a zero divisor.
Poly exact_divide(const Poly& num, const Poly& den, const TermOrder& order);

/// Replaces variable i by images[i].
Poly substitute(const Poly& p, std::span<const Poly> images);

Rational evaluate(const Poly& p, std::span<const Rational> values);

template <class Real>
Real evaluate_numeric(const Poly& p, std::span<const Real> values) {
  Real acc = 0;
  for (const auto& [m, c] : p.terms()) {
    Real t = static_cast<Real>(c.get_num().get_d()) / static_cast<Real>(c.get_den().get_d());
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      for (std::uint16_t k = 0; k < m[i]; ++k) t *= values[i];
    }
    acc += t;
  }
  return acc;
}

/// Paper-style rendering, e.g. "T1^2 - 2T3 - 6T2 - 8T1 - 24", with one name
/// per variable and terms in descending `order`.
std::string to_text(const Poly& p, std::span<const std::string> names, const TermOrder& order);

std::string monomial_text(const Monomial& m, std::size_t nvars, std::span<const std::string> names);

}  // namespace trigweyl
