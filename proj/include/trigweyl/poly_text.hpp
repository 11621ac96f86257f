#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trigweyl/expsum.hpp"
#include "trigweyl/polynomial.hpp"
#include "trigweyl/weyl_orbits.hpp"

namespace trigweyl {

// Text form of polynomials in orbit invariants, as used in printed tables:
//   "T1^2 - 2T3 - 6T2 - 8T1 - 24",  "-3/2T7 + T_{9,1}",  "2*T1*T3^2".
// Coefficients precede the factors; '*' is optional; "−" (U+2212) is accepted
// as a minus sign.

struct ParsedFactor {
  OrbitLabel label;
  unsigned power = 1;
};

struct ParsedTerm {
  Rational coefficient;
  std::vector<ParsedFactor> factors;
};

/// Throws Error(ParseError) with the offending position.
std::vector<ParsedTerm> parse_terms(std::string_view text);

/// Polynomial in the given variables (T_label -> variable index).
Poly parse_poly(std::string_view text, std::span<const OrbitLabel> variables);

/// Linear combination of invariants; a bare number is the T_0 coefficient.
InvariantCombo parse_combo(std::string_view text);

/// "T1", "T_{9,1}".
std::string invariant_name(const OrbitLabel& label);
std::vector<std::string> variable_names(std::span<const OrbitLabel> variables);

/// Highest label first, constant last.
std::string to_text(const InvariantCombo& combo);

}  // namespace trigweyl
