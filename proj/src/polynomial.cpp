#include "trigweyl/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "trigweyl/error.hpp"

namespace trigweyl {

TermOrder TermOrder::graded(std::size_t nvars) {
  std::vector<std::int64_t> w(nvars);
  std::iota(w.begin(), w.end(), 1);
  return TermOrder(std::move(w));
}

std::int64_t TermOrder::weight(const Monomial& m) const {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) w += weights_[i] * m[i];
  return w;
}

bool TermOrder::greater(const Monomial& a, const Monomial& b) const {
  const auto wa = weight(a), wb = weight(b);
  if (wa != wb) return wa > wb;
  return a > b;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Monomial m{};
  m[i] = 1;
  return monomial(nvars, m, 1);
}

Poly Poly::monomial(std::size_t nvars, const Monomial& m, const Rational& c) {
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

static void require_same_vars(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::DimensionMismatch, "polynomial variable count");
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_vars(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_vars(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_vars(a, b);
  Poly out(a.nvars());
  Monomial m;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < kMaxVars; ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

std::vector<std::pair<Monomial, Rational>> Poly::sorted_terms(const TermOrder& order) const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return order.greater(x.first, y.first); });
  return out;
}

Poly pow(const Poly& p, unsigned k) {
  Poly result = Poly::constant(p.nvars(), 1);
  Poly base = p;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly partial(const Poly& p, std::size_t var) {
  if (var >= p.nvars()) throw Error(ErrorCode::DimensionMismatch, "no variable " + std::to_string(var));
  Poly out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    out.add_term(d, c * m[var]);
  }
  return out;
}

std::pair<Monomial, Rational> leading_term(const Poly& p, const TermOrder& order) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    if (order.greater(it->first, best->first)) best = it;
  }
  return *best;
}

static bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

Poly exact_divide(const Poly& num, const Poly& den, const TermOrder& order) {
  require_same_vars(num, den);
  if (den.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  static const std::vector<std::string> kNames = {"X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"};
  const auto [dm, dc] = leading_term(den, order);
  Poly quotient(num.nvars());
  Poly rest = num;
  while (!rest.is_zero()) {
    const auto [rm, rc] = leading_term(rest, order);
    if (!divides(dm, rm)) {
      throw Error(ErrorCode::NotDivisible, "remainder leading term " + rc.get_str() + "*" +
                                               monomial_text(rm, num.nvars(), kNames));
    }
    Monomial qm{};
    for (std::size_t i = 0; i < kMaxVars; ++i) qm[i] = static_cast<std::uint16_t>(rm[i] - dm[i]);
    const Poly step = Poly::monomial(num.nvars(), qm, rc / dc);
    quotient += step;
    rest -= step * den;
  }
  return quotient;
}

Poly substitute(const Poly& p, std::span<const Poly> images) {
  if (images.size() != p.nvars()) throw Error(ErrorCode::DimensionMismatch, "substitution image count");
  const std::size_t out_vars = images.empty() ? 0 : images.front().nvars();
  // Powers are cached per variable since the same exponents recur.
  std::vector<std::vector<Poly>> powers(p.nvars());
  auto power = [&](std::size_t i, unsigned k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(out_vars, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Poly out(out_vars);
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(out_vars, c);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (m[i] > 0) t = t * power(i, m[i]);
    }
    out += t;
  }
  return out;
}

Rational evaluate(const Poly& p, std::span<const Rational> values) {
  if (values.size() < p.nvars()) throw Error(ErrorCode::DimensionMismatch, "evaluation point");
  Rational acc = 0;
  Rational t;
  for (const auto& [m, c] : p.terms()) {
    t = c;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      for (std::uint16_t k = 0; k < m[i]; ++k) t *= values[i];
    }
    acc += t;
  }
  return acc;
}

std::string monomial_text(const Monomial& m, std::size_t nvars, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (m[i] == 0) continue;
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string to_text(const Poly& p, std::span<const std::string> names, const TermOrder& order) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(order)) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::string mono = monomial_text(m, p.nvars(), names);
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str();
      os << mono;
    }
  }
  return os.str();
}

}  // namespace trigweyl
