#include "trigweyl/reference.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "trigweyl/error.hpp"
#include "trigweyl/poly_text.hpp"
#include "trigweyl/serialize.hpp"

namespace trigweyl {

namespace detail {
extern const std::string_view kReferenceText;
}

namespace {

LatticeVector vector_from_units(const Json& j) {
  std::vector<Rational> units;
  for (const auto& x : j) units.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
  return LatticeVector::from_units(units);
}

ReferenceData::TextRow text_row(const Json& j, const char* key_field) {
  ReferenceData::TextRow row;
  row.key = j.at(key_field).get<std::string>();
  row.text = j.at("expression").get<std::string>();
  row.flag = j.value("flag", "");
  row.note = j.value("note", "");
  return row;
}

std::string term_text(const Rational& c, const std::string& mono) {
  if (mono.empty()) return c.get_str();
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return c.get_str() + mono;
}

}  // namespace

ReferenceData parse_reference(std::string_view json_text) {
  const Json j = Json::parse(json_text);
  ReferenceData ref;
  for (const auto& l : j.at("basis")) ref.basis.push_back(label_from_json(l));
  for (const auto& row : j.at("orbits")) {
    ReferenceData::OrbitRow o;
    o.label = label_from_json(row.at("label"));
    for (const auto& g : row.at("generators")) o.generators.push_back(vector_from_units(g));
    o.cardinal = row.at("cardinal").get<std::size_t>();
    ref.orbits.push_back(std::move(o));
  }
  for (const auto& row : j.at("max_vectors")) ref.basis_max_vectors.push_back(vector_from_units(row.at("vector")));
  for (const auto& row : j.at("expressions")) ref.expressions.push_back(text_row(row, "label"));
  for (const auto& row : j.at("metric_orbit_form")) ref.metric_orbit_form.push_back(text_row(row, "entry"));
  for (const auto& row : j.at("metric_basis_form")) ref.metric_basis_form.push_back(text_row(row, "entry"));
  ref.determinant_constant = parse_rational(j.at("determinant_constant").get<std::string>());
  for (const auto& row : j.at("root_factors")) {
    ref.root_factors.push_back(text_row(row, "orbit"));
    ref.root_factor_leading.push_back(row.at("leading").get<std::string>());
  }
  for (const auto& row : j.at("weyl_vectors")) {
    ref.weyl_vectors.emplace_back(label_from_json(row.at("orbit")), vector_from_units(row.at("vector")));
  }
  for (const auto& row : j.at("r_coefficients")) {
    ref.r_coefficients.emplace_back(label_from_json(row.at("orbit")),
                                    row.at("components").get<std::vector<std::string>>());
  }
  for (const auto& row : j.at("potential_constants")) {
    ref.potential.push_back({label_from_json(row.at("a")), label_from_json(row.at("b")),
                             parse_rational(row.at("rho").get<std::string>()),
                             parse_rational(row.at("C").get<std::string>())});
  }
  ref.flag_weights = j.at("flag_weights").get<std::vector<std::int64_t>>();
  return ref;
}

const ReferenceData& reference_data() {
  static const ReferenceData data = parse_reference(detail::kReferenceText);
  return data;
}

std::size_t DiffReport::count(const std::string& status) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const DiffEntry& e) { return e.status == status; }));
}

DiffEntry diff_poly(const std::string& item, const Poly& computed, const std::string& printed,
                    const std::vector<OrbitLabel>& variables, const std::vector<std::string>& names) {
  DiffEntry entry{item, "match", {}};
  const std::size_t k = variables.size();
  std::map<Monomial, int> seen;
  for (const auto& term : parse_terms(printed)) {
    Monomial m{};
    for (const auto& f : term.factors) {
      auto it = std::find(variables.begin(), variables.end(), f.label);
      if (it == variables.end()) throw Error(ErrorCode::ParseError, "unknown variable in " + item);
      m[static_cast<std::size_t>(it - variables.begin())] += static_cast<std::uint16_t>(f.power);
    }
    if (++seen[m] == 2) {
      entry.details.push_back("printed text repeats monomial " + (monomial_text(m, k, names).empty() ? std::string("1") : monomial_text(m, k, names)));
    }
  }
  const Poly reference = parse_poly(printed, variables);
  const TermOrder order = TermOrder::graded(k);
  std::set<Monomial> all;
  for (const auto& [m, c] : computed.terms()) all.insert(m);
  for (const auto& [m, c] : reference.terms()) all.insert(m);
  std::vector<Monomial> sorted(all.begin(), all.end());
  std::sort(sorted.begin(), sorted.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  for (const auto& m : sorted) {
    const Rational c = computed.coefficient(m), r = reference.coefficient(m);
    if (c == r) continue;
    const std::string mono = monomial_text(m, k, names);
    if (r == 0) {
      entry.details.push_back("missing from printed: " + term_text(c, mono));
    } else if (c == 0) {
      entry.details.push_back("not in computed: " + term_text(r, mono));
    } else {
      entry.details.push_back("coefficient of " + (mono.empty() ? std::string("1") : mono) + ": computed " +
                              c.get_str() + ", printed " + r.get_str());
    }
  }
  if (computed != reference) entry.status = "mismatch";
  return entry;
}

DiffEntry diff_combo(const std::string& item, const InvariantCombo& computed, const std::string& printed) {
  DiffEntry entry{item, "match", {}};
  const InvariantCombo reference = parse_combo(printed);
  std::set<OrbitLabel> all;
  for (const auto& [l, c] : computed.terms) all.insert(l);
  for (const auto& [l, c] : reference.terms) all.insert(l);
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    const Rational c = computed.coefficient(*it), r = reference.coefficient(*it);
    if (c != r) {
      entry.details.push_back("coefficient of " + (it->norm == 0 ? std::string("1") : invariant_name(*it)) +
                              ": computed " + c.get_str() + ", printed " + r.get_str());
    }
  }
  if (computed != reference) entry.status = "mismatch";
  return entry;
}

DiffReport diff_orbits(const OrbitTable& table, const ReferenceData& ref) {
  DiffReport report{"orbits", {}};
  std::size_t nonzero = table.size() - 1;
  std::size_t in_range = 0;
  for (const auto& o : table.orbits()) {
    if (o.norm() > 0 && o.norm() <= table.root_system().label_authority_norm()) ++in_range;
  }
  for (const auto& row : ref.orbits) {
    DiffEntry e{"T" + row.label.to_string(), "match", {}};
    auto k = table.find(row.label);
    if (!k) {
      if (row.label.norm <= table.max_norm()) {
        e.status = "mismatch";
        e.details.push_back("orbit missing from table");
      } else {
        continue;
      }
    } else {
      const Orbit& o = table[*k];
      if (o.cardinal() != row.cardinal) {
        e.status = "mismatch";
        e.details.push_back("cardinal computed " + std::to_string(o.cardinal()) + ", printed " +
                            std::to_string(row.cardinal));
      }
      for (const auto& g : row.generators) {
        if (table.index_of(g) != k) {
          e.status = "mismatch";
          e.details.push_back("generator " + to_text(g) + " is not in this orbit");
        }
      }
    }
    report.entries.push_back(std::move(e));
  }
  (void)nonzero;
  (void)in_range;
  return report;
}

DiffReport diff_expressions(const BasisResult& basis, const ReferenceData& ref) {
  DiffReport report{"expressions", {}};
  {
    DiffEntry e{"basis", "match", {}};
    if (basis.basis != ref.basis) {
      e.status = "mismatch";
      std::string got;
      for (const auto& b : basis.basis) got += (got.empty() ? "" : ", ") + b.to_string();
      e.details.push_back("computed basis {" + got + "}");
    }
    report.entries.push_back(std::move(e));
  }
  const auto names = basis.variable_names();
  for (const auto& row : ref.expressions) {
    const OrbitLabel label = OrbitLabel::parse(row.key);
    auto it = basis.expressions.find(label);
    if (it == basis.expressions.end()) {
      report.entries.push_back({invariant_name(label), "mismatch", {"no computed expression"}});
      continue;
    }
    DiffEntry e = diff_poly(invariant_name(label), it->second, row.text, basis.basis, names);
    if (!row.flag.empty()) {
      if (e.status == "mismatch") e.status = "flagged";
      e.details.push_back("flagged row: " + row.note);
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

namespace {

std::pair<std::size_t, std::size_t> entry_indices(const std::string& key, const std::vector<OrbitLabel>& basis) {
  const auto comma = key.find(',');
  const OrbitLabel m = OrbitLabel::parse(key.substr(0, comma));
  const OrbitLabel n = OrbitLabel::parse(key.substr(comma + 1));
  auto i = std::find(basis.begin(), basis.end(), m), j = std::find(basis.begin(), basis.end(), n);
  if (i == basis.end() || j == basis.end()) throw Error(ErrorCode::UnknownOrbit, "metric entry " + key);
  return {static_cast<std::size_t>(i - basis.begin()), static_cast<std::size_t>(j - basis.begin())};
}

}  // namespace

DiffReport diff_metric(const InverseMetric& im, const ReferenceData& ref) {
  DiffReport report{"inverse metric", {}};
  for (const auto& row : ref.metric_orbit_form) {
    const auto [i, j] = entry_indices(row.key, im.basis);
    report.entries.push_back(diff_combo("g(" + row.key + ") orbit form", im.orbit_form[i][j], row.text));
  }
  const auto names = variable_names(im.basis);
  for (const auto& row : ref.metric_basis_form) {
    const auto [i, j] = entry_indices(row.key, im.basis);
    report.entries.push_back(diff_poly("g(" + row.key + ") basis form", im.poly_form[i][j], row.text, im.basis, names));
  }
  return report;
}

DiffReport diff_factors(const FactorizationResult& f, const BasisResult& basis, const ReferenceData& ref) {
  DiffReport report{"root factors", {}};
  const auto names = basis.variable_names();
  {
    DiffEntry e{"det constant", "match", {}};
    if (f.constant != ref.determinant_constant) {
      e.status = "mismatch";
      e.details.push_back("computed " + f.constant.get_str() + ", printed " + ref.determinant_constant.get_str());
    }
    report.entries.push_back(std::move(e));
  }
  for (std::size_t r = 0; r < ref.root_factors.size(); ++r) {
    const auto& row = ref.root_factors[r];
    const OrbitLabel label = OrbitLabel::parse(row.key);
    auto it = std::find(f.root_orbits.begin(), f.root_orbits.end(), label);
    if (it == f.root_orbits.end()) {
      report.entries.push_back({"P" + row.key, "mismatch", {"no computed factor"}});
      continue;
    }
    const Poly& P = f.P[static_cast<std::size_t>(it - f.root_orbits.begin())];
    DiffEntry e = diff_poly("P" + row.key, P, row.text, basis.basis, names);
    if (!row.note.empty()) {
      if (e.status == "mismatch") e.status = "flagged";
      e.details.push_back("note: " + row.note);
    }
    report.entries.push_back(std::move(e));
    DiffEntry lead{"P" + row.key + " leading term", "match", {}};
    const Poly printed_lead = parse_poly(ref.root_factor_leading[r], basis.basis);
    const auto& [m, c] = *printed_lead.terms().begin();
    if (P.coefficient(m) != c) {
      lead.status = "mismatch";
      lead.details.push_back("computed coefficient " + P.coefficient(m).get_str());
    }
    report.entries.push_back(std::move(lead));
  }
  return report;
}

DiffReport diff_r(const RCoefficients& r, const BasisResult& basis, const ReferenceData& ref) {
  DiffReport report{"r coefficients", {}};
  const auto names = basis.variable_names();
  for (const auto& [label, comps] : ref.r_coefficients) {
    auto it = std::find(r.root_orbits.begin(), r.root_orbits.end(), label);
    if (it == r.root_orbits.end()) {
      report.entries.push_back({"r(" + label.to_string() + ")", "mismatch", {"not computed"}});
      continue;
    }
    const auto& vec = r.r[static_cast<std::size_t>(it - r.root_orbits.begin())];
    for (std::size_t m = 0; m < comps.size(); ++m) {
      report.entries.push_back(diff_poly("r(" + label.to_string() + ")_" + basis.basis[m].to_string(), vec[m], comps[m],
                                         basis.basis, names));
    }
  }
  return report;
}

DiffReport diff_potential(const PotentialData& pd, const ReferenceData& ref) {
  DiffReport report{"potential constants", {}};
  for (const auto& row : ref.potential) {
    auto a = std::find(pd.root_orbits.begin(), pd.root_orbits.end(), row.a);
    auto b = std::find(pd.root_orbits.begin(), pd.root_orbits.end(), row.b);
    DiffEntry e{"(" + row.a.to_string() + "," + row.b.to_string() + ")", "match", {}};
    if (a == pd.root_orbits.end() || b == pd.root_orbits.end()) {
      e.status = "mismatch";
      e.details.push_back("not computed");
    } else {
      const auto i = static_cast<std::size_t>(a - pd.root_orbits.begin());
      const auto j = static_cast<std::size_t>(b - pd.root_orbits.begin());
      if (pd.rho[i][j] != row.rho || pd.C[i][j] != row.C) {
        e.status = "mismatch";
        e.details.push_back("computed rho=" + pd.rho[i][j].get_str() + " C=" + pd.C[i][j].get_str() + ", printed rho=" +
                            row.rho.get_str() + " C=" + row.C.get_str());
      }
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string to_text(const DiffReport& report) {
  std::ostringstream os;
  os << "== " << report.section << ": " << report.count("match") << " match, " << report.count("flagged")
     << " flagged, " << report.count("mismatch") << " mismatch\n";
  for (const auto& e : report.entries) {
    os << "  [" << e.status << "] " << e.item << '\n';
    for (const auto& d : e.details) os << "      " << d << '\n';
  }
  return os.str();
}

}  // namespace trigweyl
