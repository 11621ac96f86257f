// Command-line front end for the F4 invariant / Sutherland pipeline.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trigweyl/acceptance.hpp"
#include "trigweyl/error.hpp"
#include "trigweyl/pipeline.hpp"
#include "trigweyl/poly_text.hpp"
#include "trigweyl/reference.hpp"
#include "trigweyl/serialize.hpp"

using namespace trigweyl;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::optional<int> max_norm;
  std::optional<int> extend_to;
  std::string workspace;
  std::string gamma = "0,0";
  std::uint64_t seed = 1;
  std::string report;
  unsigned threads = 1;
  // subcommand arguments
  std::string fusion_m, fusion_n;
  std::optional<std::int64_t> level;
  std::string weights = "chamber";
  std::vector<int> criteria;
};

std::vector<Rational> parse_gamma(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(parse_rational(part));
    } catch (const Error&) {
      throw UsageError("--gamma expects a/b,c/d, got '" + text + "'");
    }
  }
  if (out.size() != 2) throw UsageError("--gamma expects two rationals, got '" + text + "'");
  return out;
}

OrbitLabel parse_label(const std::string& text, const OrbitTable& table) {
  OrbitLabel l;
  try {
    l = OrbitLabel::parse(text);
  } catch (const Error&) {
    throw UsageError("bad orbit label '" + text + "'");
  }
  if (!table.find(l)) throw UsageError("orbit " + text + " is not in the table up to norm " + std::to_string(table.max_norm()));
  return l;
}

class Runner {
 public:
  Runner(const std::string& command, Options opt) : command_(command), opt_(std::move(opt)) {}

  int run() {
    if (opt_.format != "json" && opt_.format != "text") throw UsageError("--format must be json or text");
    if (!opt_.report.empty() && opt_.report != "diff") throw UsageError("--report only supports 'diff'");
    PipelineConfig cfg;
    cfg.max_norm = opt_.extend_to ? *opt_.extend_to : opt_.max_norm ? *opt_.max_norm : default_norm();
    if (cfg.max_norm < 0) throw UsageError("--max-norm must be nonnegative");
    cfg.threads = opt_.threads;
    std::string ws = opt_.workspace;
    if (ws.empty()) {
      if (const char* env = std::getenv(kWorkspaceEnv)) ws = env;
    }
    if (!ws.empty()) cfg.workspace = ws;
    pipeline_.emplace(cfg);

    if (command_ == "orbits") return orbits();
    if (command_ == "fusion") return fusion();
    if (command_ == "chevalley") return chevalley();
    if (command_ == "metric") return metric();
    if (command_ == "factorize") return factorize_cmd();
    if (command_ == "rcoeff") return rcoeff();
    if (command_ == "operator") return operator_cmd();
    if (command_ == "spectrum") return spectrum_cmd();
    if (command_ == "verify") return verify();
    throw UsageError("unknown command " + command_);
  }

 private:
  // Terms print in decreasing asymptotic size, as in the published tables.
  std::string poly_text(const Poly& p, const BasisResult& b) {
    return to_text(p, b.variable_names(), asymptotic_order(b, pipeline_->table()));
  }

  Json poly_entry(const Poly& p, const BasisResult& b) { return Json{{"text", poly_text(p, b)}, {"terms", to_json(p)}}; }

  int default_norm() const {
    if (command_ == "orbits" || command_ == "fusion" || command_ == "chevalley" || command_ == "metric") return 24;
    return 56;
  }
  bool json() const { return opt_.format == "json"; }
  bool diff() const { return opt_.report == "diff"; }
  void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

  int emit_diffs(const std::vector<DiffReport>& reports) {
    bool clean = true;
    if (json()) {
      Json out = Json::array();
      for (const auto& r : reports) {
        Json entries = Json::array();
        for (const auto& e : r.entries) entries.push_back(Json{{"item", e.item}, {"status", e.status}, {"details", e.details}});
        out.push_back(Json{{"section", r.section}, {"entries", entries}});
        clean = clean && r.clean();
      }
      emit(out);
    } else {
      for (const auto& r : reports) {
        std::cout << to_text(r);
        clean = clean && r.clean();
      }
    }
    return clean ? 0 : 1;
  }

  int orbits() {
    const auto& table = pipeline_->table();
    if (diff()) return emit_diffs({diff_orbits(table, reference_data())});
    if (json()) {
      Json out = Json::array();
      for (const auto& o : table.orbits()) out.push_back(orbit_json(o));
      emit(out);
      return 0;
    }
    for (const auto& o : table.orbits()) {
      std::string reps;
      for (const auto& g : o.generators) reps += (reps.empty() ? "" : ", ") + to_text(g);
      std::cout << "(" << o.label.to_string() << ")\t" << reps << "\t| " << o.cardinal() << '\n';
    }
    return 0;
  }

  int fusion() {
    const auto& table = pipeline_->table();
    const OrbitLabel m = parse_label(opt_.fusion_m, table), n = parse_label(opt_.fusion_n, table);
    const InvariantCombo product = pipeline_->fusions().get(m, n);
    pipeline_->save_fusions();
    if (json()) {
      Json p = Json::object();
      for (auto it = product.terms.rbegin(); it != product.terms.rend(); ++it) p[it->first.to_string()] = integer_json(it->second.get_num());
      emit(Json{{"m", m.to_string()}, {"n", n.to_string()}, {"product", p}});
    } else {
      std::cout << invariant_name(m) << " " << invariant_name(n) << " = " << to_text(product) << '\n';
    }
    return 0;
  }

  int chevalley() {
    const auto& b = pipeline_->basis();
    if (diff()) return emit_diffs({diff_expressions(b, reference_data())});
    if (json()) {
      Json basis = Json::array(), exprs = Json::array();
      for (const auto& l : b.basis) basis.push_back(l.to_string());
      for (const auto& o : pipeline_->table().orbits()) {
        const auto& p = express(o.label, b);
        Json e = poly_entry(p, b);
        e["label"] = o.label.to_string();
        if (auto it = b.provenance.find(o.label); it != b.provenance.end())
          e["from"] = Json::array({it->second.first.to_string(), it->second.second.to_string()});
        exprs.push_back(e);
      }
      emit(Json{{"max_norm", b.max_norm}, {"basis", basis}, {"expressions", exprs}});
      return 0;
    }
    std::cout << "basis:";
    for (const auto& l : b.basis) std::cout << ' ' << invariant_name(l);
    std::cout << '\n';
    for (const auto& o : pipeline_->table().orbits()) {
      if (o.norm() == 0 || b.variable_index(o.label)) continue;
      std::cout << invariant_name(o.label) << " = " << poly_text(express(o.label, b), b) << '\n';
    }
    return 0;
  }

  int metric() {
    const auto& b = pipeline_->basis();
    const auto& im = pipeline_->metric();
    pipeline_->save_fusions();
    if (diff()) return emit_diffs({diff_metric(im, reference_data())});
    if (json()) {
      Json entries = Json::array();
      for (std::size_t i = 0; i < b.nvars(); ++i)
        for (std::size_t j = i; j < b.nvars(); ++j)
          entries.push_back(Json{{"m", b.basis[i].to_string()},
                                 {"n", b.basis[j].to_string()},
                                 {"orbit_form", to_json(im.orbit_form[i][j])},
                                 {"orbit_text", to_text(im.orbit_form[i][j])},
                                 {"basis_form", poly_entry(im.poly_form[i][j], b)}});
      emit(Json{{"basis", b.variable_names()}, {"entries", entries}});
      return 0;
    }
    for (std::size_t i = 0; i < b.nvars(); ++i)
      for (std::size_t j = i; j < b.nvars(); ++j) {
        std::cout << "g(" << b.basis[i].to_string() << "," << b.basis[j].to_string() << ") = " << to_text(im.orbit_form[i][j])
                  << "\n        = " << poly_text(im.poly_form[i][j], b) << '\n';
      }
    return 0;
  }

  int factorize_cmd() {
    const auto& table = pipeline_->table();
    const auto& b = pipeline_->basis();
    const auto& f = pipeline_->factorization();
    if (diff()) return emit_diffs({diff_factors(f, b, reference_data())});
    std::vector<AsymptoticLead> leads;
    for (const auto& P : f.P) leads.push_back(asymptotic_report(P, b, table));
    if (json()) {
      Json factors = Json::array();
      for (std::size_t a = 0; a < f.P.size(); ++a) {
        Poly lead(b.nvars());
        lead.add_term(leads[a].monomial, leads[a].coefficient);
        const Orbit& roots = table.at(f.root_orbits[a]);
        factors.push_back(Json{{"root_orbit", f.root_orbits[a].to_string()},
                               {"positive_roots", semiorbit_split(roots, table.xi()).positive.size()},
                               {"P", poly_entry(f.P[a], b)},
                               {"leading", poly_text(lead, b)},
                               {"leading_frequency", to_json(leads[a].frequency)},
                               {"weyl_vector", to_json(weyl_vector(roots, table.xi()))}});
      }
      emit(Json{{"constant", rational_json(f.constant)}, {"det", poly_entry(f.det, b)}, {"factors", factors}});
      return 0;
    }
    std::cout << "det g = " << f.constant.get_str();
    for (const auto& l : f.root_orbits) std::cout << " P" << l.to_string();
    std::cout << "  (" << f.det.size() << " terms)\n";
    for (std::size_t a = 0; a < f.P.size(); ++a) {
      Poly lead(b.nvars());
      lead.add_term(leads[a].monomial, leads[a].coefficient);
      const Orbit& roots = table.at(f.root_orbits[a]);
      std::cout << "P" << f.root_orbits[a].to_string() << " = " << poly_text(f.P[a], b) << '\n'
                << "  leading " << poly_text(lead, b) << " at frequency " << to_text(leads[a].frequency) << '\n'
                << "  Weyl vector " << to_text(weyl_vector(roots, table.xi())) << '\n';
    }
    return 0;
  }

  int rcoeff() {
    const auto& b = pipeline_->basis();
    const auto& r = pipeline_->r();
    if (diff()) return emit_diffs({diff_r(r, b, reference_data())});
    if (json()) {
      Json out = Json::array();
      for (std::size_t a = 0; a < r.r.size(); ++a) {
        Json comps = Json::array();
        for (const auto& p : r.r[a]) comps.push_back(poly_entry(p, b));
        out.push_back(Json{{"root_orbit", r.root_orbits[a].to_string()}, {"r", comps}});
      }
      emit(out);
      return 0;
    }
    for (std::size_t a = 0; a < r.r.size(); ++a)
      for (std::size_t m = 0; m < r.r[a].size(); ++m)
        std::cout << "r(" << r.root_orbits[a].to_string() << ")_" << b.basis[m].to_string() << " = "
                  << poly_text(r.r[a][m], b) << '\n';
    return 0;
  }

  std::vector<std::int64_t> flag_weights() {
    const auto& b = pipeline_->basis();
    if (opt_.weights == "graded") return graded_flag_weights(b);
    if (opt_.weights == "chamber") return chamber_flag_weights(b, pipeline_->table());
    throw UsageError("--weights must be chamber or graded");
  }

  int operator_cmd() {
    const auto gamma = parse_gamma(opt_.gamma);
    const auto& table = pipeline_->table();
    const auto& b = pipeline_->basis();
    const OperatorSpec op = make_operator(pipeline_->metric(), pipeline_->r(), gamma);
    const auto& pd = pipeline_->potential(opt_.seed);
    if (diff()) return emit_diffs({diff_potential(pd, reference_data())});
    std::optional<FlagSpace> space;
    RationalMatrix M;
    if (opt_.level) {
      space.emplace(flag_weights(), *opt_.level);
      M = flag_matrix(op, *space, opt_.threads);
    }
    const std::size_t k = b.nvars();
    if (json()) {
      Json second = Json::array(), first = Json::array(), g = Json::array();
      for (std::size_t m = 0; m < k; ++m) {
        Json row = Json::array();
        for (std::size_t n = 0; n < k; ++n) row.push_back(poly_entry(op.second_order[m][n], b));
        second.push_back(row);
        first.push_back(poly_entry(op.first_order[m], b));
      }
      for (const auto& x : gamma) g.push_back(rational_json(x));
      Json pot = Json::array();
      for (std::size_t a = 0; a < pd.root_orbits.size(); ++a)
        for (std::size_t c = 0; c < pd.root_orbits.size(); ++c)
          pot.push_back(Json{{"a", pd.root_orbits[a].to_string()},
                             {"b", pd.root_orbits[c].to_string()},
                             {"rho", rational_json(pd.rho[a][c])},
                             {"C", rational_json(pd.C[a][c])},
                             {"polynomial", pd.R[a][c].den.size() == 1 && pd.R[a][c].den.degree() == 0},
                             {"residual", static_cast<double>(pd.residual[a][c])}});
      Json out{{"gamma", g}, {"second_order", second}, {"first_order", first}, {"potential", pot}};
      if (space) {
        Json mons = Json::array();
        for (const auto& m : space->monomials()) {
          Poly p(k);
          p.add_term(m, Rational(1));
          mons.push_back(poly_text(p, b));
        }
        out["flag"] = Json{{"level", *opt_.level}, {"weights", space->weights()}, {"basis", mons}, {"matrix", to_json(M)}};
      }
      emit(out);
      return 0;
    }
    std::cout << "D = -sum d_m g(m,n) d_n + sum f_m d_m at gamma (" << gamma[0].get_str() << ", " << gamma[1].get_str()
              << ")\n";
    for (std::size_t m = 0; m < k; ++m)
      std::cout << "f_" << b.basis[m].to_string() << " = " << poly_text(op.first_order[m], b) << '\n';
    std::cout << "potential W = 1/4 sum (gamma_a gamma_b - 1/4) R_ab, R_ab = rho_ab S_a + C_ab\n";
    for (std::size_t a = 0; a < pd.root_orbits.size(); ++a)
      for (std::size_t c = 0; c < pd.root_orbits.size(); ++c)
        std::cout << "  (" << pd.root_orbits[a].to_string() << "," << pd.root_orbits[c].to_string()
                  << ") rho = " << pd.rho[a][c].get_str() << ", C = " << pd.C[a][c].get_str() << '\n';
    if (space) {
      std::cout << "flag matrix on V_" << *opt_.level << " (" << space->dim() << " monomials), row i = D(m_i):\n";
      for (std::size_t i = 0; i < space->dim(); ++i) {
        Poly p(k);
        p.add_term(space->monomials()[i], Rational(1));
        Poly image(k);
        for (std::size_t j = 0; j < space->dim(); ++j) image.add_term(space->monomials()[j], M[i][j]);
        std::cout << "  D(" << poly_text(p, b) << ") = " << poly_text(image, b) << '\n';
      }
    }
    (void)table;
    return 0;
  }

  int spectrum_cmd() {
    const auto gamma = parse_gamma(opt_.gamma);
    const auto& table = pipeline_->table();
    const auto& b = pipeline_->basis();
    const OperatorSpec op = make_operator(pipeline_->metric(), pipeline_->r(), gamma);
    const FlagSpace space(flag_weights(), opt_.level.value_or(12));
    const auto pairs = spectrum(op, space, asymptotic_order(b, table), opt_.threads);
    if (json()) {
      Json out = Json::array();
      for (const auto& e : pairs) out.push_back(to_json(e));
      emit(out);
      return 0;
    }
    std::cout << "V_" << space.level() << ": " << space.dim() << " monomials, " << pairs.size() << " eigenvalues\n";
    for (const auto& e : pairs) {
      std::cout << "[w" << e.block_weight << "] ";
      if (e.exact) {
        std::cout << e.exact->get_str();
      } else {
        std::cout << "~" << static_cast<double>(e.approx);
        if (e.approx_imag != 0) std::cout << (e.approx_imag < 0 ? " - " : " + ") << std::fabs(static_cast<double>(e.approx_imag)) << "i";
      }
      std::cout << "  " << (e.eigenfunction ? poly_text(*e.eigenfunction, b) : std::string("(no eigenfunction)"));
      if (!e.note.empty()) std::cout << "  [" << e.note << "]";
      std::cout << '\n';
    }
    return 0;
  }

  int verify() {
    if (pipeline_->config().max_norm < 56) throw UsageError("verify needs --max-norm of at least 56");
    AcceptanceOptions ao;
    ao.seed = opt_.seed;
    ao.only = opt_.criteria;
    const auto results = run_acceptance(*pipeline_, ao);
    pipeline_->save_fusions();
    bool ok = true;
    if (json()) {
      Json out = Json::array();
      for (const auto& r : results) out.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      emit(out);
    }
    for (const auto& r : results) {
      if (!json()) std::cout << to_text(r);
      ok = ok && r.pass;
    }
    return ok ? 0 : 1;
  }

  std::string command_;
  Options opt_;
  std::optional<Pipeline> pipeline_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trigonometric Weyl invariants of F4 and the associated Sutherland operator"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format: json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-norm", opt.max_norm, "Largest orbit norm in the table (default 24 or 56 by command)");
  app.add_option("--extend-to", opt.extend_to, "Recompute with a larger table reaching this norm");
  app.add_option("--workspace", opt.workspace, std::string("Cache directory (default $") + kWorkspaceEnv + ")");
  app.add_option("--gamma", opt.gamma, "Coupling constants a/b,c/d");
  app.add_option("--seed", opt.seed, "Seed for numeric sampling");
  app.add_option("--report", opt.report, "Compare with the embedded published values")->check(CLI::IsMember({"diff"}));
  app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1u, 256u));

  app.add_subcommand("orbits", "Weyl orbits of the lattice up to the norm cutoff");
  auto* fusion = app.add_subcommand("fusion", "Product of two orbit invariants");
  fusion->add_option("m", opt.fusion_m, "First orbit label")->required();
  fusion->add_option("n", opt.fusion_n, "Second orbit label")->required();
  app.add_subcommand("chevalley", "Basis invariants and every orbit invariant in terms of them");
  app.add_subcommand("metric", "Inverse metric in orbit and basis form");
  app.add_subcommand("factorize", "Determinant of the inverse metric and its root-orbit factors");
  app.add_subcommand("rcoeff", "First-order coefficient vectors r");
  auto* op = app.add_subcommand("operator", "Operator coefficients, potential constants and optional flag matrix");
  op->add_option("--level", opt.level, "Also print the flag matrix on V_N");
  op->add_option("--weights", opt.weights, "Flag grading: chamber or graded")->check(CLI::IsMember({"chamber", "graded"}));
  auto* spec = app.add_subcommand("spectrum", "Eigenvalues and eigenfunctions on a flag space");
  spec->add_option("--level", opt.level, "Flag level N (default 12)");
  spec->add_option("--weights", opt.weights, "Flag grading: chamber or graded")->check(CLI::IsMember({"chamber", "graded"}));
  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--criterion", opt.criteria, "Only these criterion ids")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    Runner runner(app.get_subcommands().front()->get_name(), opt);
    return runner.run();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
