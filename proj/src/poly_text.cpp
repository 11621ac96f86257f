#include "trigweyl/poly_text.hpp"

#include <algorithm>
#include <cctype>

#include "trigweyl/error.hpp"

namespace trigweyl {

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false, digit = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digit = true;
    } else if (s[i] == '/' && !slash && digit && i + 1 < s.size()) {
      slash = true;
    } else {
      throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
    }
  }
  if (!digit) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  // Sign: '+', '-', or the three-byte U+2212.
  int sign() {
    skip_space();
    if (accept('+')) return 1;
    if (accept('-')) return -1;
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return -1;
    }
    return 0;
  }
  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("digits expected");
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

ParsedFactor parse_factor(Scanner& sc) {
  if (!sc.accept('T')) sc.fail("'T' expected");
  sc.accept('_');
  ParsedFactor f;
  if (sc.accept('{')) {
    f.label.norm = std::stoi(sc.digits());
    if (sc.accept(',')) f.label.tag = std::stoi(sc.digits());
    if (!sc.accept('}')) sc.fail("'}' expected");
  } else {
    f.label.norm = std::stoi(sc.digits());
  }
  if (sc.accept('^')) {
    f.power = static_cast<unsigned>(std::stoul(sc.digits()));
    if (f.power == 0) sc.fail("zero exponent");
  }
  return f;
}

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text) {
  Scanner sc(text);
  std::vector<ParsedTerm> terms;
  if (sc.done()) sc.fail("empty polynomial");
  bool first = true;
  while (!sc.done()) {
    int s = sc.sign();
    if (s == 0) {
      if (!first) sc.fail("'+' or '-' expected");
      s = 1;
    }
    first = false;
    ParsedTerm term;
    term.coefficient = s;
    bool have_number = false;
    if (sc.at_digit()) {
      std::string num = sc.digits();
      if (sc.accept('/')) num += "/" + sc.digits();
      term.coefficient *= parse_rational(num);
      have_number = true;
      sc.accept('*');
    }
    while (sc.peek() == 'T') {
      term.factors.push_back(parse_factor(sc));
      sc.accept('*');
    }
    if (!have_number && term.factors.empty()) sc.fail("term expected");
    terms.push_back(std::move(term));
  }
  return terms;
}

Poly parse_poly(std::string_view text, std::span<const OrbitLabel> variables) {
  Poly p(variables.size());
  for (const auto& term : parse_terms(text)) {
    Monomial m{};
    for (const auto& f : term.factors) {
      auto it = std::find(variables.begin(), variables.end(), f.label);
      if (it == variables.end()) {
        throw Error(ErrorCode::ParseError, "T" + f.label.to_string() + " is not a variable in '" +
                                               std::string(text) + "'");
      }
      m[static_cast<std::size_t>(it - variables.begin())] += static_cast<std::uint16_t>(f.power);
    }
    p.add_term(m, term.coefficient);
  }
  return p;
}

InvariantCombo parse_combo(std::string_view text) {
  InvariantCombo combo;
  for (const auto& term : parse_terms(text)) {
    if (term.factors.size() > 1 || (term.factors.size() == 1 && term.factors[0].power != 1)) {
      throw Error(ErrorCode::ParseError, "nonlinear term in combination '" + std::string(text) + "'");
    }
    combo.add(term.factors.empty() ? OrbitLabel{} : term.factors[0].label, term.coefficient);
  }
  return combo;
}

std::string invariant_name(const OrbitLabel& label) {
  if (label.tag == 0) return "T" + std::to_string(label.norm);
  return "T_{" + label.to_string() + "}";
}

std::vector<std::string> variable_names(std::span<const OrbitLabel> variables) {
  std::vector<std::string> names;
  for (const auto& l : variables) names.push_back(invariant_name(l));
  return names;
}

std::string to_text(const InvariantCombo& combo) {
  if (combo.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = combo.terms.rbegin(); it != combo.terms.rend(); ++it) {
    const auto& [label, c] = *it;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (label.norm == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str();
      out += invariant_name(label);
    }
  }
  return out;
}

}  // namespace trigweyl
