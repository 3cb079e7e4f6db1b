// hopfcyclic: check Hopf algebras and coefficient modules, build Hopf-cyclic complexes,
// compute cyclic (co)homology and evaluate pairings from JSON input.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 input error, 3 resource cap.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hopfcyclic/hopfcyclic.hpp"

namespace hc = hopfcyclic;
using hc::Json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_cap = 3;

struct RunConfig {
  std::string command;
  std::string input;
  std::string kind;
  std::optional<std::string> field;
  std::size_t nmax = hc::default_n_max;
  bool oracle = false;
  std::string format = "text";
  std::string out;
  std::string entry;
  std::string module;
  std::string carrier;
  std::size_t ambient_cap = hc::default_ambient_cap;
};

struct Report {
  Json body;
  int exit_code = exit_ok;

  explicit Report(const std::string& command) {
    body["command"] = command;
    body["checks"] = Json::array();
  }

  void fail(int code) {
    if (exit_code == exit_ok || code > exit_code) exit_code = code;
  }

  void add_check(const std::string& name, bool pass, const std::vector<std::size_t>& witness = {},
                 const std::string& detail = {}) {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    c["witness"] = witness;
    if (!detail.empty()) c["detail"] = detail;
    body["checks"].push_back(std::move(c));
    if (!pass) fail(exit_failed);
  }

  void add_checks(const hc::CheckReport& r, const std::string& prefix) {
    for (const auto& i : r.items) add_check(prefix + i.name, i.pass, i.witness, i.detail);
  }

  void info(const std::string& name, const Json& value) { body["info"][name] = value; }

  void error(const hc::Error& e, int code, const std::vector<std::size_t>& tuple = {}, int degree = -1) {
    Json err;
    err["code"] = hc::to_string(e.code());
    err["message"] = e.message();
    if (!tuple.empty()) err["witness"] = tuple;
    if (degree >= 0) err["degree"] = degree;
    body["errors"].push_back(std::move(err));
    fail(code);
  }
};

int error_exit_code(hc::ErrorCode c) {
  switch (c) {
    case hc::ErrorCode::resource_cap: return exit_cap;
    case hc::ErrorCode::parse_error:
    case hc::ErrorCode::field_mismatch:
    case hc::ErrorCode::field_required:
    case hc::ErrorCode::shape_mismatch:
    case hc::ErrorCode::version_mismatch:
    case hc::ErrorCode::division_by_zero: return exit_input;
    default: return exit_failed;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hc::Error(hc::ErrorCode::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Rendering

std::string witness_str(const Json& w) {
  std::string s;
  for (const auto& x : w) s += (s.empty() ? "" : ",") + std::to_string(x.get<std::size_t>());
  return "(" + s + ")";
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  const Json& b = r.body;
  os << "command: " << b["command"].get<std::string>() << "\n";
  if (b.contains("field")) os << "field: " << b["field"].get<std::string>() << "\n";
  if (b.contains("kind")) os << "kind: " << b["kind"].get<std::string>() << "\n";
  for (const auto& c : b["checks"]) {
    os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
    if (!c["pass"].get<bool>() && !c["witness"].empty()) os << " witness " << witness_str(c["witness"]);
    if (c.contains("detail")) os << "  [" << c["detail"].get<std::string>() << "]";
    os << "\n";
  }
  if (b.contains("info"))
    for (const auto& [k, v] : b["info"].items()) os << "info " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  if (b.contains("levels")) {
    os << "levels:";
    for (const auto& l : b["levels"]) os << " " << l["n"].get<std::size_t>() << ":" << l["dim"].get<std::size_t>();
    os << "\n";
  }
  if (b.contains("status")) os << "status: " << b["status"].get<std::string>() << "\n";
  if (b.contains("hc")) {
    const bool oracle = b.contains("oracle");
    os << "n\tZ\tB\tHC" << (oracle ? "\toracle" : "") << "\n";
    for (std::size_t i = 0; i < b["hc"].size(); ++i) {
      const auto& h = b["hc"][i];
      os << h["n"].get<std::size_t>() << "\t" << h["z"].get<std::size_t>() << "\t" << h["b"].get<std::size_t>() << "\t"
         << h["hc"].get<std::size_t>();
      if (oracle) os << "\t" << b["oracle"][i]["hc"].get<std::size_t>();
      os << "\n";
    }
  }
  if (b.contains("pairings"))
    for (const auto& p : b["pairings"])
      os << "pair " << p["map"].get<std::string>() << " n=" << p["n"].get<std::size_t>() << ": "
         << p["evaluated"].get<std::size_t>() << " evaluated, " << p["cocycles"].get<std::size_t>() << " cocycles, "
         << p["nontrivial"].get<std::size_t>() << " nontrivial classes, coboundaries preserved "
         << (p["coboundaries_preserved"].get<bool>() ? "yes" : "no") << "\n";
  if (b.contains("entries"))
    for (const auto& e : b["entries"]) {
      os << e["name"].get<std::string>() << " (" << e["field"].get<std::string>() << ", dim " << e["dim"].get<std::size_t>()
         << ")";
      for (const auto& m : e["modules"]) os << " " << m.get<std::string>();
      os << "\n";
    }
  if (b.contains("errors"))
    for (const auto& e : b["errors"]) {
      os << "error " << e["code"].get<std::string>() << ": " << e["message"].get<std::string>();
      if (e.contains("degree")) os << " at degree " << e["degree"].get<int>();
      if (e.contains("witness")) os << " witness " << witness_str(e["witness"]);
      os << "\n";
    }
  os << "exit: " << r.exit_code << "\n";
  return os.str();
}

void emit(const std::string& text, const RunConfig& cfg) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw hc::Error(hc::ErrorCode::parse_error, "cannot write '" + cfg.out + "'");
  f << text;
}

void emit_report(Report& r, const RunConfig& cfg) {
  r.body["exit_code"] = r.exit_code;
  emit(cfg.format == "json" ? r.body.dump(2) + "\n" : render_text(r), cfg);
}

// ---------------------------------------------------------------------------
// Shared steps

/// Hopf axioms, then (when the axioms hold) the module's full verification. Returns
/// false when the Hopf axioms fail, since nothing downstream is meaningful then.
template <class F>
bool check_inputs(Report& rep, hc::HopfData<F>& h, hc::SaydCandidate<F>* m) {
  auto axioms = hc::check_structure(hc::StructureKind::hopf, h);
  rep.add_checks(axioms, "hopf.");
  if (!axioms.ok()) return false;
  h.ensure_antipode_inverse();
  if (!m) return true;
  hc::detail::validate_candidate(h, *m);
  auto r = hc::check_sayd(h, *m);
  for (const auto& i : r.items) {
    if (i.name == "yetter_drinfeld") rep.info("module.yetter_drinfeld", i.pass ? "pass" : "fail");
    else rep.add_check("module." + i.name, i.pass, i.witness, i.detail);
  }
  m->verify(h);
  rep.info("module.version", hc::to_string(m->version()));
  if (m->dim == 1 && m->version() == hc::Version::right_left) {
    hc::OneDimData<F> d{{}, m->coaction.map.col(0)};
    for (const auto& a : m->action.mats) d.delta.push_back(a.at(0, 0));
    auto v = hc::check_mpi(h, d);
    for (const auto& i : v.report.items)
      if (i.name.rfind("classical", 0) == 0 || i.name == "verdicts_agree") rep.add_check("mpi." + i.name, i.pass, i.witness, i.detail);
  }
  return true;
}

template <class F>
hc::Carrier<F> resolve_carrier(const std::optional<Json>& j, hc::ComplexKind kind, const hc::HopfData<F>& h) {
  return j ? hc::carrier_from_json<F>(*j, h) : hc::default_carrier(kind, h);
}

hc::ComplexKind kind_of(const RunConfig& cfg) {
  if (cfg.kind.empty()) throw hc::Error(hc::ErrorCode::parse_error, "--kind is required");
  return hc::complex_kind_from_string(cfg.kind);
}

template <class F>
void record_levels(Report& rep, const hc::CyclicModule<F>& x, std::size_t upto) {
  rep.body["levels"] = Json::array();
  for (std::size_t n = 0; n < x.levels() && n <= upto; ++n) rep.body["levels"].push_back(Json{{"n", n}, {"dim", x.dims[n]}});
}

template <class F>
void record_verdict(Report& rep, const hc::IdentityVerdict& v) {
  rep.add_checks(v.report, "identities.");
  rep.body["status"] = hc::to_string(v.status);
}

/// Builds the complex, recording witnessed failures; nullopt when construction failed.
template <class F>
std::optional<hc::CyclicModule<F>> build_recorded(Report& rep, const hc::ComplexSpec<F>& spec) {
  try {
    return hc::build_complex(spec);
  } catch (const hc::WitnessedError<F>& e) {
    rep.error(e, error_exit_code(e.code()), e.tuple(), e.degree());
  } catch (const hc::Error& e) {
    rep.error(e, error_exit_code(e.code()));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Commands

template <class F>
void cmd_check(Report& rep, hc::Document<F>& doc) {
  hc::SaydCandidate<F>* m = doc.module ? &*doc.module : nullptr;
  if (!check_inputs(rep, doc.hopf, m)) return;
  if (doc.carrier) {
    auto c = hc::carrier_from_json<F>(*doc.carrier, doc.hopf);
    if (c.algebra && c.action) rep.add_checks(hc::check_compat(hc::CompatKind::module_algebra, c, doc.hopf), "carrier.");
    if (c.coalgebra && c.action)
      rep.add_checks(hc::check_compat(hc::CompatKind::module_coalgebra, c, doc.hopf), "carrier.");
    if (c.algebra && c.coaction)
      rep.add_checks(hc::check_compat(hc::CompatKind::comodule_algebra, c, doc.hopf), "carrier.");
  }
}

template <class F>
std::optional<hc::ComplexSpec<F>> spec_for(Report& rep, hc::Document<F>& doc, const RunConfig& cfg, std::size_t levels) {
  if (!doc.module) throw hc::Error(hc::ErrorCode::parse_error, "document: missing \"module\"");
  const auto kind = kind_of(cfg);
  rep.body["kind"] = hc::to_string(kind);
  if (!check_inputs(rep, doc.hopf, &*doc.module)) return std::nullopt;
  auto carrier = resolve_carrier(doc.carrier, kind, doc.hopf);
  return hc::ComplexSpec<F>{kind, doc.hopf, std::move(carrier), *doc.module, levels, cfg.ambient_cap};
}

template <class F>
void cmd_build(Report& rep, hc::Document<F>& doc, const RunConfig& cfg) {
  auto spec = spec_for(rep, doc, cfg, cfg.nmax);
  if (!spec) return;
  auto x = build_recorded(rep, *spec);
  if (!x) return;
  record_levels(rep, *x, cfg.nmax);
  record_verdict<F>(rep, hc::verify_identities(*x));
}

template <class F>
void cmd_hc(Report& rep, hc::Document<F>& doc, const RunConfig& cfg) {
  // degree n needs level n + 1
  auto spec = spec_for(rep, doc, cfg, cfg.nmax + 1);
  if (!spec) return;
  auto x = build_recorded(rep, *spec);
  if (!x) return;
  record_levels(rep, *x, cfg.nmax + 1);
  auto verdict = hc::verify_identities(*x);
  record_verdict<F>(rep, verdict);
  if (verdict.status != hc::CyclicStatus::cyclic) {
    rep.error(hc::Error(hc::ErrorCode::not_cyclic, "cyclic (co)homology needs a cyclic module; identity " +
                                                       verdict.first_identity + " fails"),
              exit_failed);
    return;
  }
  rep.body["hc"] = Json::array();
  if (cfg.oracle) rep.body["oracle"] = Json::array();
  for (std::size_t n = 0; n <= cfg.nmax; ++n) {
    auto r = x->direction == hc::Direction::cosimplicial ? hc::cyclic_cohomology(*x, n) : hc::cyclic_homology(*x, n);
    rep.body["hc"].push_back(Json{{"n", n}, {"z", r.dim_z}, {"b", r.dim_b}, {"hc", r.dim_hc}});
    if (cfg.oracle) {
      auto o = hc::bicomplex_oracle(*x, n);
      rep.body["oracle"].push_back(Json{{"n", n}, {"hc", o.dim_hc}, {"agree", o.dim_hc == r.dim_hc}});
      rep.add_check("oracle_agrees n=" + std::to_string(n), o.dim_hc == r.dim_hc);
    }
  }
}

template <class F>
void cmd_pair(Report& rep, hc::Document<F>& doc, const RunConfig& cfg) {
  if (!doc.module) throw hc::Error(hc::ErrorCode::parse_error, "document: missing \"module\"");
  if (!check_inputs(rep, doc.hopf, &*doc.module)) return;
  const std::size_t levels = cfg.nmax + 1;
  auto c = resolve_carrier(doc.carrier, hc::ComplexKind::coalgebra, doc.hopf);
  auto a = resolve_carrier(doc.algebra, hc::ComplexKind::module_algebra, doc.hopf);
  hc::ComplexSpec<F> cs{hc::ComplexKind::coalgebra, doc.hopf, c, *doc.module, levels, cfg.ambient_cap};
  hc::ComplexSpec<F> as{hc::ComplexKind::module_algebra, doc.hopf, a, *doc.module, levels, cfg.ambient_cap};
  auto act = doc.c_action ? hc::c_action_from_json<F>(*doc.c_action, doc.hopf, c.dim, a.dim)
                          : hc::adjoint_coalgebra_action(doc.hopf);
  rep.add_checks(hc::check_c_action(act, c, a, doc.hopf), "c_action.");
  std::optional<hc::PairingSetup<F>> p;
  try {
    p = hc::make_pairing_setup(cs, as, act);
  } catch (const hc::WitnessedError<F>& e) {
    rep.error(e, error_exit_code(e.code()), e.tuple(), e.degree());
    return;
  } catch (const hc::Error& e) {
    rep.error(e, error_exit_code(e.code()));
    return;
  }
  rep.body["pairings"] = Json::array();
  auto z_alg0 = hc::cyclic_cohomology(p->algebra_complex, 0);
  auto z_coal0 = hc::cyclic_cohomology(p->coalgebra_complex, 0);
  const auto& inc = *p->algebra_complex.carriers[0].sub;
  for (std::size_t n = 0; n <= cfg.nmax; ++n) {
    struct Tally {
      std::size_t evaluated = 0, cocycles = 0, nontrivial = 0;
      bool preserved = true;
    };
    auto record = [&](const char* map, const Tally& t) {
      rep.body["pairings"].push_back(Json{{"map", map},
                                          {"n", n},
                                          {"evaluated", t.evaluated},
                                          {"cocycles", t.cocycles},
                                          {"nontrivial", t.nontrivial},
                                          {"coboundaries_preserved", t.preserved}});
      rep.add_check(std::string(map) + " cocycles n=" + std::to_string(n), t.cocycles == t.evaluated);
      rep.add_check(std::string(map) + " coboundaries n=" + std::to_string(n), t.preserved);
    };
    auto guarded = [&](Tally& t, auto&& eval, bool from_boundary) {
      ++t.evaluated;
      try {
        auto r = eval();
        ++t.cocycles;
        if (from_boundary && !r.coboundary) t.preserved = false;
        if (!from_boundary && !r.coboundary) ++t.nontrivial;
      } catch (const hc::Error& e) {
        if (e.code() != hc::ErrorCode::output_not_cocycle) throw;
      }
    };
    Tally n0;
    auto hcn = hc::cyclic_cohomology(p->coalgebra_complex, n);
    for (const auto& f : z_alg0.cycles) {
      auto famb = inc.inclusion().apply(f);
      for (const auto& z : hcn.representatives) guarded(n0, [&] { return hc::pair_n0(*p, n, z, famb); }, false);
      for (const auto& z : hcn.boundaries) guarded(n0, [&] { return hc::pair_n0(*p, n, z, famb); }, true);
    }
    record("coalgebra_n x algebra_0", n0);
    Tally on;
    auto han = hc::cyclic_cohomology(p->algebra_complex, n);
    for (const auto& z : z_coal0.cycles) {
      for (const auto& f : han.representatives) guarded(on, [&] { return hc::pair_0n(*p, n, z, f); }, false);
      for (const auto& f : han.boundaries) guarded(on, [&] { return hc::pair_0n(*p, n, z, f); }, true);
    }
    record("coalgebra_0 x algebra_n", on);
  }
}

/// Lists entries, or exports one as an input document.
void cmd_catalog(const RunConfig& cfg) {
  auto export_entry = [&](const auto& e) {
    const auto* chosen = static_cast<decltype(&e.modules[0].module)>(nullptr);
    for (const auto& m : e.modules)
      if (m.name == cfg.module) chosen = &m.module;
    if (!cfg.module.empty() && !chosen) throw hc::Error(hc::ErrorCode::parse_error, "unknown module '" + cfg.module + "'");
    Json carrier = cfg.carrier;
    emit(hc::document_to_json(e.hopf, chosen, cfg.carrier.empty() ? nullptr : &carrier).dump(2) + "\n", cfg);
  };
  if (!cfg.entry.empty()) {
    if (auto e = hc::rational_catalog_entry(cfg.entry)) export_entry(*e);
    else export_entry(hc::cyclotomic_catalog_entry(cfg.entry));
    return;
  }
  Report rep("catalog");
  rep.body["entries"] = Json::array();
  auto list = [&](const auto& e) {
    Json modules = Json::array();
    for (const auto& m : e.modules) modules.push_back(m.name);
    rep.body["entries"].push_back(
        Json{{"name", e.name}, {"field", e.hopf.field.spec().str()}, {"dim", e.hopf.dim()}, {"modules", modules}});
  };
  for (const auto& name : hc::catalog_names()) {
    if (auto e = hc::rational_catalog_entry(name)) list(*e);
    else list(hc::cyclotomic_catalog_entry(name));
  }
  emit_report(rep, cfg);
}

template <class F>
void dispatch(Report& rep, const Json& doc_json, const RunConfig& cfg) {
  auto doc = hc::document_from_json<F>(doc_json);
  rep.body["field"] = doc.field.str();
  if (cfg.command == "check") cmd_check(rep, doc);
  else if (cfg.command == "build") cmd_build(rep, doc, cfg);
  else if (cfg.command == "hc") cmd_hc(rep, doc, cfg);
  else cmd_pair(rep, doc, cfg);
}

int run(const RunConfig& cfg) {
  if (cfg.command == "catalog") {
    cmd_catalog(cfg);
    return exit_ok;
  }
  Report rep(cfg.command);
  try {
    if (cfg.nmax > hc::max_degree)
      throw hc::Error(hc::ErrorCode::parse_error, "--nmax must be at most " + std::to_string(hc::max_degree));
    Json doc = hc::parse_json_text(read_file(cfg.input));
    hc::FieldSpec fs = hc::document_field(doc);
    if (cfg.field && hc::parse_field_flag(*cfg.field) != fs)
      throw hc::Error(hc::ErrorCode::field_mismatch, "--field " + *cfg.field + " but the input declares " + fs.str());
    if (fs.kind == hc::FieldSpec::Kind::rationals) dispatch<hc::Rational>(rep, doc, cfg);
    else dispatch<hc::Cyclotomic>(rep, doc, cfg);
  } catch (const hc::Error& e) {
    rep.error(e, error_exit_code(e.code()));
  }
  emit_report(rep, cfg);
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-cyclic (co)homology with exact arithmetic"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string field;

  auto common = [&](CLI::App* sub, bool needs_kind) {
    sub->add_option("input", cfg.input, "JSON input document")->required();
    sub->add_option("--field", field, "Q or cyclotomic:N; must match the input");
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "write the report to this path");
    if (needs_kind) {
      sub->add_option("--kind", cfg.kind, "coalgebra, module_algebra, comodule_algebra_coh or comodule_algebra_hom")
          ->required();
    }
  };

  auto* check = app.add_subcommand("check", "Hopf axioms, module/comodule, anti-Yetter-Drinfeld, stability, MPI");
  common(check, false);
  auto* build = app.add_subcommand("build", "build a complex and verify the (para)cyclic identities");
  common(build, true);
  build->add_option("--nmax", cfg.nmax, "top level (at most 4)");
  build->add_option("--ambient-cap", cfg.ambient_cap, "largest ambient tensor dimension");
  auto* hcmd = app.add_subcommand("hc", "cyclic (co)homology dimensions per degree");
  common(hcmd, true);
  hcmd->add_option("--nmax", cfg.nmax, "top degree (at most 4)");
  hcmd->add_option("--ambient-cap", cfg.ambient_cap, "largest ambient tensor dimension");
  hcmd->add_flag("--oracle", cfg.oracle, "cross-check with the cyclic bicomplex");
  auto* pair = app.add_subcommand("pair", "evaluate both coalgebra-algebra pairings and verify the outputs");
  common(pair, false);
  pair->add_option("--nmax", cfg.nmax, "top degree (at most 4)");
  pair->add_option("--ambient-cap", cfg.ambient_cap, "largest ambient tensor dimension");
  auto* catalog = app.add_subcommand("catalog", "list catalog entries or export one as an input document");
  catalog->add_option("entry", cfg.entry, "entry name");
  catalog->add_option("--module", cfg.module, "bundled module to include");
  catalog->add_option("--carrier", cfg.carrier, "carrier preset to include");
  catalog->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  catalog->add_option("--out", cfg.out, "write to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_input;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (!field.empty()) cfg.field = field;
  try {
    return run(cfg);
  } catch (const hc::Error& e) {
    std::cerr << e.what() << "\n";
    return error_exit_code(e.code());
  }
}
