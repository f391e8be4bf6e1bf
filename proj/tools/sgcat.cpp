// sgcat: command line front end.  Exit codes: 0 ok / verdict computed, 1 a check failed, 2 usage or format error.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgcat/decat.hpp"
#include "sgcat/docio.hpp"
#include "sgcat/modlift.hpp"
#include "sgcat/simplicity.hpp"

using namespace sgcat;
using json = nlohmann::ordered_json;

namespace {

struct Opts {
  std::string file;
  bool json_out = false;
  std::string field;
  uint64_t seed = 1;
  int max_dual_mult = 0;
  double tol = 1e-12;
  // generate
  std::string kind, out;
  std::vector<std::string> params;
  bool regular = false;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json rep_json(const Report& r) {
  return {{"pass", r.pass}, {"checked", r.checked}, {"failures", r.failures}};
}

std::string rep_text(const std::string& name, const Report& r) {
  std::ostringstream os;
  os << "  " << name << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.checked << " checks)\n";
  for (auto& f : r.failures) os << "    - " << f << "\n";
  return os.str();
}

SearchOptions search(const Opts& o) {
  SearchOptions s;
  s.seed = o.seed;
  s.max_mult = o.max_dual_mult;
  return s;
}

Document load(const Opts& o) {
  Document d = load_document_file(o.file);
  if (!o.field.empty()) {
    Field want = Field::parse(o.field);
    if (want != d.S.C.field)
      throw DocError(o.file, "field mismatch: document is over " + d.S.C.field.name() + ", --field " + want.name());
  }
  return d;
}

std::vector<int> dims(const Presheaf& P) { return P.dim; }

// ---- subcommands -------------------------------------------------------------------------------

int cmd_validate(const Opts& o, json& J, std::ostream& os) {
  Document d = load(o);
  const Category& C = d.S.C;
  Report pres = validate_presentation(C), loc = local_end_check(C), sg = validate_semigroup(d.S);
  J["presentation"] = rep_json(pres);
  J["local_endomorphisms"] = rep_json(loc);
  J["semigroup"] = rep_json(sg);
  os << "validate " << o.file << " (" << C.n() << " indecomposables over " << C.field.name() << ")\n"
     << rep_text("presentation", pres) << rep_text("local endomorphism rings", loc) << rep_text("semigroup", sg);
  bool ok = pres.pass && loc.pass && sg.pass;
  if (d.module) {
    Report m = validate_module(*d.module);
    J["module"] = rep_json(m);
    os << rep_text("module", m);
    ok = ok && m.pass;
  }
  J["pass"] = ok;
  return ok ? 0 : 1;
}

int cmd_rigid(const Opts& o, json& J, std::ostream& os) {
  Document d = load(o);
  const Semigroup& S = d.S;
  const Category& C = S.C;
  bool ok = true;
  J["objects"] = json::array();
  os << "rigid " << o.file << "\n";
  for (int x = 0; x < S.n(); ++x) {
    json e;
    e["object"] = C.labels[x];
    for (int side = 0; side < 2; ++side) {
      auto adj = side == 0 ? find_dual(S, x, search(o)) : find_left_dual(S, x, search(o));
      std::string key = side == 0 ? "right_dual" : "left_dual";
      json r;
      if (adj) {
        AdjReport ar = verify_adjunction(S, *adj);
        r = {{"found", true},
             {"dual", C.obj_str(side == 0 ? adj->Fd : adj->F)},
             {"I", rep_json(ar.I)},
             {"II", rep_json(ar.II)},
             {"III", rep_json(ar.III)},
             {"IV", rep_json(ar.IV)},
             {"naturality", rep_json(ar.naturality)},
             {"equivariance", rep_json(ar.equivariance)}};
        os << "  " << C.labels[x] << " " << key << " = " << C.obj_str(side == 0 ? adj->Fd : adj->F)
           << (ar.pass() ? " (axioms I-IV pass)" : " (axioms FAIL)") << "\n";
        ok = ok && ar.pass();
      } else {
        // no adjunction found: report what the zero data violates
        Adjunction z = side == 0 ? zero_adjunction(S, {x}, {}) : zero_adjunction(S, {}, {x});
        AdjReport ar = verify_adjunction(S, z);
        r = {{"found", false}, {"zero_data", {{"I", rep_json(ar.I)}, {"II", rep_json(ar.II)}, {"III", rep_json(ar.III)}, {"IV", rep_json(ar.IV)}}}};
        os << "  " << C.labels[x] << " " << key << ": none found\n";
        std::pair<const char*, const Report*> axs[] = {{"I", &ar.I}, {"II", &ar.II}, {"III", &ar.III}, {"IV", &ar.IV}};
        for (auto& [ax, p] : axs)
          for (auto& f : p->failures) os << "    - Axiom " << ax << ": " << f << "\n";
        ok = false;
      }
      e[key] = r;
    }
    J["objects"].push_back(e);
  }
  J["rigid"] = ok;
  os << (ok ? "rigid\n" : "not rigid\n");
  return ok ? 0 : 1;
}

Certificate need_cert(const Semigroup& S, const Opts& o) {
  std::string missing;
  auto c = find_certificate(S, search(o), &missing);
  if (!c) throw std::runtime_error("no rigidity certificate: " + missing);
  return *c;
}

int cmd_unit(const Opts& o, json& J, std::ostream& os) {
  Document d = load(o);
  const Semigroup& S = d.S;
  Certificate cert = need_cert(S, o);
  Quotient U = unit_general(S, &cert);
  UnitReport R = unit_verify(S, U.P, cert, o.seed);
  J["unit_dims"] = dims(U.P);
  J["unital"] = R.unital;
  J["end_dim"] = R.end_dim;
  J["simple"] = R.simple;
  J["left"] = rep_json(R.left);
  J["right"] = rep_json(R.right);
  J["seed"] = o.seed;
  if (!R.note.empty()) J["note"] = R.note;
  os << "unit " << o.file << "\n  dims:";
  for (int v : U.P.dim) os << " " << v;
  os << "\n  dim End(unit) = " << R.end_dim << (R.simple ? ", simple" : "") << "\n"
     << rep_text("left unitor", R.left) << rep_text("right unitor", R.right);
  return R.unital ? 0 : 1;
}

int cmd_ansatz(const Opts& o, json& J, std::ostream& os) {
  Document d = load(o);
  const Semigroup& S = d.S;
  const Category& C = S.C;
  Certificate cert = need_cert(S, o);
  Ansatz r = unit_ansatz(S, Side::Right, &cert), l = unit_ansatz(S, Side::Left, &cert);
  AnsatzIso ai = ansatz_iso(S, cert, r, l);
  Quotient U = unit_general(S, &cert);
  IsoResult ig = presheaf_iso(C, U.P, r.P, o.seed);
  J["right_dims"] = dims(r.P);
  J["left_dims"] = dims(l.P);
  J["psi_phi"] = rep_json(ai.report);
  J["general_vs_ansatz"] = iso_status_str(ig.status);
  bool ok = ai.report.pass && ig.status == IsoStatus::Iso;
  os << "ansatz " << o.file << "\n" << rep_text("Ψ/Φ mutually inverse", ai.report)
     << "  unit_general vs ansatz: " << iso_status_str(ig.status) << "\n";
  json bars = json::array();
  for (int f = 0; f < S.n(); ++f) {
    Liberal lb = is_liberal(S, f);
    if (!lb.liberal) continue;
    IsoResult ib = presheaf_iso(C, unit_bar(S, f, &cert).P, U.P, o.seed);
    bars.push_back({{"object", C.labels[f]}, {"iso", iso_status_str(ib.status)}});
    os << "  unit_bar(" << C.labels[f] << ") vs unit_general: " << iso_status_str(ib.status) << "\n";
    ok = ok && ib.status == IsoStatus::Iso;
  }
  if (bars.empty()) os << "  no liberal object\n";
  J["bar"] = bars;
  J["pass"] = ok;
  J["seed"] = o.seed;
  return ok ? 0 : 1;
}

int cmd_decat(const Opts& o, json& J, std::ostream& os) {
  Document d = load(o);
  const Semigroup& S = d.S;
  JCell jc = jcell_trivial(S);
  if (!jc.trivial) {
    J["jcell_trivial"] = false;
    J["witness"] = {S.C.labels[jc.F], S.C.labels[jc.G]};
    os << "decat: not J-cell trivial (" << S.C.labels[jc.F] << " not a summand of H⊠" << S.C.labels[jc.G] << "⊠K)\n";
    return 1;
  }
  PFIdempotent pf = pf_idempotent(S, o.tol);
  std::vector<Eigen::MatrixXi> act;
  for (int f = 0; f < S.n(); ++f) act.push_back(gr_action(S, {f}));
  KMReport km = km_check(act, pf.e, 1e-9);
  J["lambda"] = pf.lambda;
  J["e"] = std::vector<double>(pf.e.data(), pf.e.data() + pf.e.size());
  J["idempotent_error"] = pf.idem_err;
  J["period"] = pf.period;
  J["note"] = pf.note;
  J["km"] = {{"cone", km.cone}, {"idempotent", km.idempotent}, {"injective", km.injective}, {"support_cone", km.support_cone}};
  os << "decat " << o.file << "\n  λ = " << pf.lambda << " (" << pf.note << ")\n  e =";
  for (int i = 0; i < pf.e.size(); ++i) os << " " << pf.e(i);
  os << "\n  |E²-E| = " << pf.idem_err << "\n  KM: cone " << km.cone << ", idempotent " << km.idempotent
     << ", injective " << km.injective << "\n";
  return pf.idem_err <= pf.tol && km.pass() ? 0 : 1;
}

json stab_json(const Category& C, const StabilityReport& r) {
  json j = {{"transitive", r.transitive}, {"simple_transitive", r.simple_transitive}, {"certificate", r.certificate}};
  if (!r.transitive) j["witness"] = {C.labels[r.wx], C.labels[r.wy]};
  return j;
}

int cmd_disimple(const Opts& o, json& J, std::ostream& os) {
  Document d = load(o);
  const Semigroup& S = d.S;
  StabilityReport l = stability_report(regular_module(S)), r = stability_report(regular_module(reverse(S)));
  J["left"] = stab_json(S.C, l);
  J["right"] = stab_json(S.C, r);
  J["disimple"] = l.simple_transitive && r.simple_transitive;
  os << "disimple " << o.file << "\n  left: " << l.certificate << "\n  right: " << r.certificate << "\n  "
     << (l.simple_transitive && r.simple_transitive ? "disimple" : "not disimple") << "\n";
  return 0;
}

int cmd_decide(const Opts& o, json& J, std::ostream& os) {
  Document d = load(o);
  const Semigroup& S = d.S;
  std::string missing;
  auto cert = find_certificate(S, search(o), &missing);
  os << "decide-tensor " << o.file << "\n";
  if (!cert) {
    J["verdict"] = "no";
    J["evidence"] = "not rigid: " + missing;
    os << "  verdict: no\n  not rigid: " << missing << "\n";
    return 0;
  }
  TensorVerdict V = decide_finite_tensor(S, *cert, o.seed);
  J["verdict"] = V.yes ? "yes" : "no";
  J["consistent"] = V.consistent;
  J["left"] = stab_json(S.C, V.left);
  J["right"] = stab_json(S.C, V.right);
  J["unit_dims"] = V.unit_dims;
  J["end_dim_unit"] = V.unit.end_dim;
  J["evidence"] = V.evidence;
  J["seed"] = o.seed;
  os << "  verdict: " << (V.yes ? "yes" : "no") << "\n  " << V.evidence << "\n  cross-checks "
     << (V.consistent ? "consistent" : "INCONSISTENT") << "\n";
  return V.consistent ? 0 : 1;
}

int cmd_trace(const Opts& o, json& J, std::ostream& os) {
  Document d = load(o);
  const Semigroup& S = d.S;
  TraceResult T = trace_k(S.C);
  J["trace_dim"] = T.dim;
  os << "trace " << o.file << "\n  dim tr(C) = " << T.dim << "\n";
  if (S.braid) {
    Certificate cert = need_cert(S, o);
    Quotient Q = enriched_trace(S, cert);
    Quotient U = unit_general(S, &cert);
    IsoResult ir = presheaf_iso(S.C, Q.P, U.P, o.seed);
    J["enriched_dims"] = dims(Q.P);
    J["enriched_vs_unit"] = iso_status_str(ir.status);
    os << "  enriched trace dims:";
    for (int v : Q.P.dim) os << " " << v;
    os << "\n  enriched trace vs unit: " << iso_status_str(ir.status) << "\n";
  }
  return 0;
}

int cmd_lift(const Opts& o, json& J, std::ostream& os) {
  Document d = load(o);
  const Semigroup& S = d.S;
  if (!d.module && !o.regular) throw Usage("lift: document has no module section (use --regular)");
  ModuleCat Mo = d.module ? *d.module : regular_module(S);
  Certificate cert = need_cert(S, o);
  LiftReport L = unital_lift_check(S, Mo, cert, search(o));
  os << "lift " << o.file << (d.module ? "" : " (regular module)") << "\n";
  json reals = json::array();
  for (size_t f = 0; f < L.realizations.size(); ++f) {
    const Realization& r = L.realizations[f];
    reals.push_back({{"object", S.C.labels[f]},
                     {"status", real_status_str(r.status)},
                     {"reason", r.reason},
                     {"triangles", rep_json(r.triangles)},
                     {"coherence", rep_json(r.coherence)}});
    os << "  realization for " << S.C.labels[f] << ": " << real_status_str(r.status)
       << (r.reason.empty() ? "" : " (" + r.reason + ")") << "\n";
    if (r.status == RealStatus::Found) os << rep_text("  triangles", r.triangles) << rep_text("  coherence", r.coherence);
  }
  J["realizations"] = reals;
  if (!L.precondition.empty()) {
    J["pass"] = false;
    J["precondition"] = L.precondition;
    os << "  rejected: " << L.precondition << "\n";
    return 1;
  }
  ProjReport P = projectivizing_check(S, Mo);
  J["theta"] = rep_json(L.theta);
  J["roundtrip"] = rep_json(L.roundtrip);
  J["note"] = L.note;
  J["projectivizing"] = {{"value", P.projectivizing}, {"witness", P.witness}};
  J["pass"] = L.pass;
  os << rep_text("θ iso", L.theta) << rep_text("round trip", L.roundtrip) << "  projectivizing: "
     << (P.projectivizing ? "yes" : "no, " + P.witness) << "\n";
  return L.pass ? 0 : 1;
}

int cmd_generate(const Opts& o, json& J, std::ostream& os) {
  std::map<std::string, std::string> p;
  for (auto& s : o.params) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw Usage("generate: parameter '" + s + "' is not key=value");
    p[s.substr(0, eq)] = s.substr(eq + 1);
  }
  Field F = o.field.empty() ? Field::rationals() : Field::parse(o.field);
  Document d = generate(o.kind, p, F);
  Report v = validate_semigroup(d.S);
  std::string text = store_document(d);
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
  } else {
    store_document_file(d, o.out);
    os << "wrote " << o.out << " (" << d.S.n() << " indecomposables)\n";
  }
  J["objects"] = d.S.C.labels;
  J["valid"] = v.pass;
  return v.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sgcat: semigroup categories, rigidity, units and module checks"};
  app.require_subcommand(1);
  Opts o;
  std::map<std::string, int (*)(const Opts&, json&, std::ostream&)> table = {
      {"validate", cmd_validate}, {"rigid", cmd_rigid},   {"unit", cmd_unit},
      {"ansatz", cmd_ansatz},     {"decat", cmd_decat},   {"disimple", cmd_disimple},
      {"decide-tensor", cmd_decide}, {"trace", cmd_trace}, {"lift", cmd_lift},
      {"generate", cmd_generate}};
  const std::map<std::string, std::string> about = {
      {"validate", "check presentation, pentagon and module coherence"},
      {"rigid", "find duals and verify Axioms I-IV"},
      {"unit", "build the unit presheaf and verify unitality"},
      {"ansatz", "left and right unit ansatz and the comparison maps"},
      {"decat", "action matrices, Perron-Frobenius idempotent, km check"},
      {"disimple", "simple transitivity of both regular modules"},
      {"decide-tensor", "decide whether the Day completion is a finite tensor category"},
      {"trace", "k-linear trace and, with a braiding, the enriched trace"},
      {"lift", "realizations, unital lift and projectivizing check for a module"},
      {"generate", "write a generated document"}};
  std::vector<CLI::App*> subs;
  for (auto& [name, fn] : table) {
    CLI::App* s = app.add_subcommand(name, about.at(name));
    if (name == "generate") {
      s->add_option("kind", o.kind, "zero | linear_semigroup | bimodule_proj | group_proj")->required();
      s->add_option("-p,--param", o.params, "key=value");
      s->add_option("-o,--out", o.out, "output file (default stdout)");
    } else {
      s->add_option("file", o.file, "document")->required();
    }
    if (name == "lift") s->add_flag("--regular", o.regular, "use the regular module when the document has none");
    s->add_flag("--json", o.json_out, "machine-readable report");
    s->add_option("--field", o.field, "Q or GFp");
    s->add_option("--seed", o.seed, "seed for randomized searches");
    s->add_option("--max-dual-mult", o.max_dual_mult, "multiplicity bound for dual candidates");
    if (name == "decat") s->add_option("--tol", o.tol, "power iteration tolerance");
    subs.push_back(s);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  std::string name;
  for (auto* s : subs)
    if (s->parsed()) name = s->get_name();
  json J;
  J["command"] = name;
  std::ostringstream text;
  int rc;
  try {
    rc = table.at(name)(o, J, text);
  } catch (const DocError& e) {
    J["error"] = e.what();
    rc = 2;
  } catch (const Usage& e) {
    J["error"] = e.what();
    rc = 2;
  } catch (const std::invalid_argument& e) {
    J["error"] = e.what();
    rc = 2;
  } catch (const std::runtime_error& e) {
    J["error"] = e.what();
    rc = 1;
  }
  J["exit"] = rc;
  if (o.json_out) {
    std::cout << J.dump(2) << "\n";
  } else {
    std::cout << text.str();
    if (J.contains("error")) std::cerr << "error: " << J["error"].get<std::string>() << "\n";
  }
  return rc;
}
