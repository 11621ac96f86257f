#pragma once

#include <json.hpp>

#include "trigweyl/chevalley.hpp"
#include "trigweyl/expsum.hpp"
#include "trigweyl/lattice.hpp"
#include "trigweyl/metric.hpp"
#include "trigweyl/polynomial.hpp"
#include "trigweyl/sutherland.hpp"
#include "trigweyl/weyl_orbits.hpp"

namespace trigweyl {

using Json = nlohmann::ordered_json;

// Numbers are written as JSON integers when they fit in 64 bits and as
// decimal strings otherwise; readers accept both.
Json integer_json(const Integer& z);
Integer integer_from_json(const Json& j);
/// {"num": n, "den": d}
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {"coords": [scaled...], "scale": 4}
Json to_json(const LatticeVector& v);
LatticeVector lattice_from_json(const Json& j);

/// [{"coords", "num", "den"}], highest height first.
Json to_json(const ExpSum& s, const OrderingVector& xi);
ExpSum expsum_from_json(const Json& j, std::size_t dim);

/// [{"label", "num", "den"}], highest label first.
Json to_json(const InvariantCombo& c);
InvariantCombo combo_from_json(const Json& j);

/// [{"exp", "num", "den"}] in descending graded order.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j, std::size_t nvars);

Json to_json(const OrbitLabel& l);
OrbitLabel label_from_json(const Json& j);

/// Orbit rows: {label, representative, representatives, max_vector, cardinal}.
Json orbit_json(const Orbit& o);
Json to_json(const OrbitTable& t);
OrbitTable orbit_table_from_json(const Json& j, const RootSystem& rs);

Json to_json(const FusionTable& f);
void load_fusions(const Json& j, FusionTable& f);

Json to_json(const BasisResult& b);
BasisResult basis_from_json(const Json& j);

Json to_json(const InverseMetric& im);
InverseMetric metric_from_json(const Json& j);

Json to_json(const FactorizationResult& f);
FactorizationResult factorization_from_json(const Json& j, std::size_t nvars);

Json to_json(const RCoefficients& r);
RCoefficients r_from_json(const Json& j, std::size_t nvars);

Json to_json(const EigenPair& e);
Json to_json(const RationalMatrix& m);

}  // namespace trigweyl
