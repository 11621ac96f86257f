#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "trigweyl/error.hpp"
#include "trigweyl/serialize.hpp"
#include "trigweyl/workspace.hpp"

using namespace trigweyl;
namespace fs = std::filesystem;

TEST_CASE("rationals use integers when they fit and strings otherwise") {
  const Rational small(-3, 7);
  CHECK(rational_json(small).dump() == R"({"num":-3,"den":7})");
  CHECK(rational_from_json(rational_json(small)) == small);
  Rational big;
  big = Integer("123456789012345678901234567890");
  CHECK(rational_json(big)["num"].is_string());
  CHECK(rational_from_json(rational_json(big)) == big);
  CHECK_THROWS_AS(rational_from_json(Json::parse(R"({"num":1,"den":0})")), Error);
}

TEST_CASE("documented shapes") {
  CHECK(to_json(fixtures::vec({0.5, -0.5, 0, 1})).dump() == R"({"coords":[2,-2,0,4],"scale":4})");
  const Poly p = parse_poly("T1^2 - 3/2", std::vector<OrbitLabel>{{1, 0}, {2, 0}, {3, 0}, {6, 0}});
  CHECK(to_json(p).dump() == R"([{"exp":[2,0,0,0],"num":1,"den":1},{"exp":[0,0,0,0],"num":-3,"den":2}])");
  CHECK(to_json(parse_combo("T5 + 3T3")).dump() ==
        R"([{"label":"5","num":1,"den":1},{"label":"3","num":3,"den":1}])");
}

TEST_CASE("pipeline results round-trip") {
  auto& pl = fixtures::pipeline(56);
  const auto& t = pl.table();
  const auto t2 = orbit_table_from_json(to_json(t), t.root_system());
  CHECK(to_json(t2) == to_json(t));
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(t2[i].elements == t[i].elements);

  const auto& b = pl.basis();
  const auto b2 = basis_from_json(to_json(b));
  CHECK(b2.basis == b.basis);
  CHECK(b2.expressions == b.expressions);
  CHECK(b2.provenance == b.provenance);

  const auto& im = pl.metric();
  const auto im2 = metric_from_json(to_json(im));
  CHECK(im2.orbit_form == im.orbit_form);
  CHECK(im2.poly_form == im.poly_form);

  const auto& f = pl.factorization();
  const auto f2 = factorization_from_json(to_json(f), 4);
  CHECK(f2.det == f.det);
  CHECK(f2.P == f.P);
  CHECK(f2.constant == f.constant);

  const auto& r = pl.r();
  const auto r2 = r_from_json(to_json(r), 4);
  CHECK(r2.r == r.r);

  FusionTable ft(t);
  load_fusions(to_json(pl.fusions()), ft);
  CHECK(ft.snapshot() == pl.fusions().snapshot());

  const auto s = expand(parse_combo("T3 - 1/2T1 + 4"), t);
  CHECK(expsum_from_json(to_json(s, t.xi()), 4) == s);
}

TEST_CASE("restoring a tampered orbit table fails") {
  auto& pl = fixtures::pipeline(24);
  Json j = to_json(pl.table());
  j["orbits"][3]["cardinal"] = 7;
  CHECK_THROWS_AS(orbit_table_from_json(j, pl.table().root_system()), Error);
}

TEST_CASE("workspace manifest and invalidation") {
  const fs::path root = fs::temp_directory_path() / "trigweyl-test-ws";
  fs::remove_all(root);
  {
    Workspace ws(root, "F4", 24, OrderingVector());
    ws.store("orbits", Json{{"x", 1}});
    CHECK(ws.load("orbits"));
    CHECK_FALSE(ws.load("basis"));
  }
  {
    Workspace again(root, "F4", 24, OrderingVector());
    CHECK(again.load("orbits"));
  }
  // A manifest from another engine version clears the caches.
  const fs::path dir = Workspace(root, "F4", 24, OrderingVector()).directory();
  {
    std::ofstream(dir / "manifest.json") << R"({"engine_version":"0.0.0"})";
  }
  Workspace reset(root, "F4", 24, OrderingVector());
  CHECK_FALSE(reset.load("orbits"));
  CHECK(reset.load("manifest"));
  // Different parameters live in a different directory.
  CHECK(Workspace(root, "F4", 56, OrderingVector()).directory() != dir);
  fs::remove_all(root);
}

TEST_CASE("cached pipeline reproduces the computed one") {
  const fs::path root = fs::temp_directory_path() / "trigweyl-test-pipe";
  fs::remove_all(root);
  PipelineConfig cfg;
  cfg.max_norm = 24;
  cfg.workspace = root;
  Json cold, warm;
  {
    Pipeline p(cfg);
    cold = Json{to_json(p.table()), to_json(p.basis()), to_json(p.metric())};
  }
  {
    Pipeline p(cfg);
    warm = Json{to_json(p.table()), to_json(p.basis()), to_json(p.metric())};
  }
  CHECK(cold == warm);
  // A corrupt cache entry is recomputed.
  {
    std::ofstream(Workspace(root, "F4", 24, OrderingVector()).directory() / "basis.json") << "{not json";
  }
  Pipeline p(cfg);
  CHECK(to_json(p.basis()) == cold[1]);
  fs::remove_all(root);
}

TEST_CASE("embedded reference data") {
  const auto& ref = reference_data();
  CHECK(ref.orbits.size() == 30);
  CHECK(ref.expressions.size() == 23);
  CHECK(ref.metric_orbit_form.size() == 10);
  CHECK(ref.metric_basis_form.size() == 10);
  CHECK(ref.determinant_constant == Rational(1, 4));
  CHECK(ref.root_factors.size() == 2);
  CHECK(ref.potential.size() == 4);
  CHECK(ref.flag_weights == std::vector<std::int64_t>{1, 2, 3, 4});
}

TEST_CASE("term-level diff") {
  const std::vector<OrbitLabel> vars{{1, 0}, {2, 0}, {3, 0}, {6, 0}};
  const auto names = variable_names(vars);
  const Poly computed = parse_poly("T1^2 + 2T2 - 5", vars);
  CHECK(diff_poly("x", computed, "T1^2 + 2T2 - 5", vars, names).status == "match");
  const auto e = diff_poly("x", computed, "T1^2 + 3T2 + T3 + T3", vars, names);
  CHECK(e.status == "mismatch");
  CHECK(e.details.size() == 4);  // repeat, T3 extra, T2 coefficient, constant missing
}
