#include "trigweyl/serialize.hpp"

#include <limits>

#include "trigweyl/error.hpp"

namespace trigweyl {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::ParseError, "bad integer " + j.dump());
    return z;
  }
  throw Error(ErrorCode::ParseError, "integer expected, got " + j.dump());
}

Json rational_json(const Rational& q) {
  Json j;
  j["num"] = integer_json(q.get_num());
  j["den"] = integer_json(q.get_den());
  return j;
}

Rational rational_from_json(const Json& j) {
  Rational q(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  q.canonicalize();
  return q;
}

Json to_json(const LatticeVector& v) {
  Json coords = Json::array();
  for (auto c : v.scaled()) coords.push_back(c);
  return Json{{"coords", coords}, {"scale", kScale}};
}

LatticeVector lattice_from_json(const Json& j) {
  if (j.at("scale").get<int>() != kScale) throw Error(ErrorCode::ParseError, "unsupported scale");
  const auto coords = j.at("coords").get<std::vector<std::int32_t>>();
  if (coords.size() > kMaxRank) throw Error(ErrorCode::DimensionMismatch, "rank too large");
  return LatticeVector::from_scaled(coords);
}

Json to_json(const ExpSum& s, const OrderingVector& xi) {
  Json out = Json::array();
  for (const auto& [f, c] : s.sorted_terms(xi)) {
    Json t = rational_json(c);
    Json coords = Json::array();
    for (auto x : f.scaled()) coords.push_back(x);
    out.push_back(Json{{"coords", coords}, {"num", t["num"]}, {"den", t["den"]}});
  }
  return out;
}

ExpSum expsum_from_json(const Json& j, std::size_t dim) {
  ExpSum s(dim);
  for (const auto& t : j) {
    const auto coords = t.at("coords").get<std::vector<std::int32_t>>();
    if (coords.size() != dim) throw Error(ErrorCode::DimensionMismatch, "frequency rank");
    s.add(LatticeVector::from_scaled(coords), rational_from_json(t));
  }
  return s;
}

Json to_json(const OrbitLabel& l) { return l.to_string(); }

OrbitLabel label_from_json(const Json& j) { return OrbitLabel::parse(j.get<std::string>()); }

Json to_json(const InvariantCombo& c) {
  Json out = Json::array();
  for (auto it = c.terms.rbegin(); it != c.terms.rend(); ++it) {
    Json r = rational_json(it->second);
    out.push_back(Json{{"label", it->first.to_string()}, {"num", r["num"]}, {"den", r["den"]}});
  }
  return out;
}

InvariantCombo combo_from_json(const Json& j) {
  InvariantCombo c;
  for (const auto& t : j) c.add(label_from_json(t.at("label")), rational_from_json(t));
  return c;
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.sorted_terms(TermOrder::graded(p.nvars()))) {
    Json exps = Json::array();
    for (std::size_t i = 0; i < p.nvars(); ++i) exps.push_back(m[i]);
    Json r = rational_json(c);
    out.push_back(Json{{"exp", exps}, {"num", r["num"]}, {"den", r["den"]}});
  }
  return out;
}

Poly poly_from_json(const Json& j, std::size_t nvars) {
  Poly p(nvars);
  for (const auto& t : j) {
    const auto exps = t.at("exp").get<std::vector<int>>();
    if (exps.size() != nvars) throw Error(ErrorCode::DimensionMismatch, "exponent vector length");
    Monomial m{};
    for (std::size_t i = 0; i < nvars; ++i) {
      if (exps[i] < 0 || exps[i] > std::numeric_limits<std::uint16_t>::max()) {
        throw Error(ErrorCode::ParseError, "exponent out of range");
      }
      m[i] = static_cast<std::uint16_t>(exps[i]);
    }
    p.add_term(m, rational_from_json(t));
  }
  return p;
}

Json orbit_json(const Orbit& o) {
  Json reps = Json::array();
  for (const auto& g : o.generators) reps.push_back(to_json(g));
  return Json{{"label", o.label.to_string()},
              {"representative", to_json(o.representative())},
              {"representatives", reps},
              {"max_vector", to_json(o.max_vector)},
              {"cardinal", o.cardinal()}};
}

Json to_json(const OrbitTable& t) {
  Json xi = Json::array();
  for (auto x : t.xi().values()) xi.push_back(x);
  Json orbits = Json::array();
  for (const auto& o : t.orbits()) orbits.push_back(orbit_json(o));
  return Json{{"root_system", t.root_system().name()}, {"max_norm", t.max_norm()}, {"xi", xi}, {"orbits", orbits}};
}

OrbitTable orbit_table_from_json(const Json& j, const RootSystem& rs) {
  if (j.at("root_system").get<std::string>() != rs.name()) throw Error(ErrorCode::CacheError, "root system mismatch");
  const OrderingVector xi(j.at("xi").get<std::vector<std::int64_t>>());
  std::vector<Orbit> skeletons;
  std::vector<std::size_t> cardinals;
  for (const auto& row : j.at("orbits")) {
    Orbit o;
    o.label = label_from_json(row.at("label"));
    for (const auto& g : row.at("representatives")) o.generators.push_back(lattice_from_json(g));
    o.max_vector = lattice_from_json(row.at("max_vector"));
    skeletons.push_back(std::move(o));
    cardinals.push_back(row.at("cardinal").get<std::size_t>());
  }
  return OrbitTable::restore(rs, j.at("max_norm").get<int>(), xi, skeletons, cardinals);
}

Json to_json(const FusionTable& f) {
  Json out = Json::array();
  for (const auto& [key, combo] : f.snapshot()) {
    out.push_back(Json{{"m", key.first.to_string()}, {"n", key.second.to_string()}, {"product", to_json(combo)}});
  }
  return out;
}

void load_fusions(const Json& j, FusionTable& f) {
  for (const auto& row : j) {
    f.insert(label_from_json(row.at("m")), label_from_json(row.at("n")), combo_from_json(row.at("product")));
  }
}

Json to_json(const BasisResult& b) {
  Json basis = Json::array();
  for (const auto& l : b.basis) basis.push_back(l.to_string());
  Json exprs = Json::array();
  for (const auto& [label, p] : b.expressions) exprs.push_back(Json{{"label", label.to_string()}, {"poly", to_json(p)}});
  Json prov = Json::array();
  for (const auto& [label, mn] : b.provenance) {
    prov.push_back(Json{{"label", label.to_string()}, {"m", mn.first.to_string()}, {"n", mn.second.to_string()}});
  }
  return Json{{"max_norm", b.max_norm}, {"basis", basis}, {"expressions", exprs}, {"provenance", prov}};
}

BasisResult basis_from_json(const Json& j) {
  BasisResult b;
  b.max_norm = j.at("max_norm").get<int>();
  for (const auto& l : j.at("basis")) b.basis.push_back(label_from_json(l));
  for (const auto& e : j.at("expressions")) {
    b.expressions.emplace(label_from_json(e.at("label")), poly_from_json(e.at("poly"), b.basis.size()));
  }
  for (const auto& p : j.at("provenance")) {
    b.provenance.emplace(label_from_json(p.at("label")), std::pair{label_from_json(p.at("m")), label_from_json(p.at("n"))});
  }
  return b;
}

Json to_json(const InverseMetric& im) {
  Json basis = Json::array();
  for (const auto& l : im.basis) basis.push_back(l.to_string());
  Json orbit = Json::array(), poly = Json::array();
  for (std::size_t i = 0; i < im.basis.size(); ++i) {
    Json orow = Json::array(), prow = Json::array();
    for (std::size_t k = 0; k < im.basis.size(); ++k) {
      orow.push_back(to_json(im.orbit_form[i][k]));
      prow.push_back(to_json(im.poly_form[i][k]));
    }
    orbit.push_back(orow);
    poly.push_back(prow);
  }
  return Json{{"basis", basis}, {"orbit_form", orbit}, {"poly_form", poly}};
}

InverseMetric metric_from_json(const Json& j) {
  InverseMetric im;
  for (const auto& l : j.at("basis")) im.basis.push_back(label_from_json(l));
  const std::size_t k = im.basis.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<InvariantCombo> orow;
    std::vector<Poly> prow;
    for (std::size_t c = 0; c < k; ++c) {
      orow.push_back(combo_from_json(j.at("orbit_form").at(i).at(c)));
      prow.push_back(poly_from_json(j.at("poly_form").at(i).at(c), k));
    }
    im.orbit_form.push_back(std::move(orow));
    im.poly_form.push_back(std::move(prow));
  }
  return im;
}

Json to_json(const FactorizationResult& f) {
  Json orbits = Json::array(), P = Json::array();
  for (std::size_t a = 0; a < f.P.size(); ++a) {
    orbits.push_back(f.root_orbits[a].to_string());
    P.push_back(to_json(f.P[a]));
  }
  return Json{{"det", to_json(f.det)}, {"root_orbits", orbits}, {"P", P}, {"constant", rational_json(f.constant)}};
}

FactorizationResult factorization_from_json(const Json& j, std::size_t nvars) {
  FactorizationResult f;
  f.det = poly_from_json(j.at("det"), nvars);
  for (const auto& l : j.at("root_orbits")) f.root_orbits.push_back(label_from_json(l));
  for (const auto& p : j.at("P")) f.P.push_back(poly_from_json(p, nvars));
  f.constant = rational_from_json(j.at("constant"));
  return f;
}

Json to_json(const RCoefficients& r) {
  Json orbits = Json::array(), vecs = Json::array();
  for (std::size_t a = 0; a < r.r.size(); ++a) {
    orbits.push_back(r.root_orbits[a].to_string());
    Json comps = Json::array();
    for (const auto& p : r.r[a]) comps.push_back(to_json(p));
    vecs.push_back(comps);
  }
  return Json{{"root_orbits", orbits}, {"r", vecs}};
}

RCoefficients r_from_json(const Json& j, std::size_t nvars) {
  RCoefficients r;
  for (const auto& l : j.at("root_orbits")) r.root_orbits.push_back(label_from_json(l));
  for (const auto& comps : j.at("r")) {
    std::vector<Poly> v;
    for (const auto& p : comps) v.push_back(poly_from_json(p, nvars));
    r.r.push_back(std::move(v));
  }
  return r;
}

Json to_json(const EigenPair& e) {
  Json out;
  if (e.exact) {
    out["eigenvalue"] = rational_json(*e.exact);
  } else {
    Json cp = Json::array();
    for (const auto& c : e.charpoly) cp.push_back(rational_json(c));
    Json ev{{"approx", static_cast<double>(e.approx)}, {"charpoly", cp}};
    if (e.approx_imag != 0) ev["approx_imag"] = static_cast<double>(e.approx_imag);
    out["eigenvalue"] = ev;
  }
  out["eigenfunction"] = e.eigenfunction ? to_json(*e.eigenfunction) : Json(nullptr);
  out["block_weight"] = e.block_weight;
  if (e.exact && !e.charpoly.empty()) {
    Json cp = Json::array();
    for (const auto& c : e.charpoly) cp.push_back(rational_json(c));
    out["charpoly"] = cp;
  }
  if (!e.note.empty()) out["note"] = e.note;
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_json(x));
    out.push_back(r);
  }
  return out;
}

}  // namespace trigweyl
