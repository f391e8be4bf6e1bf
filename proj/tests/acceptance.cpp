// acceptance N  ->  one line "PASS criterion N: ..." or "FAIL criterion N: ...", exit status 0 on PASS
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "sgcat/decat.hpp"
#include "sgcat/docio.hpp"
#include "sgcat/modlift.hpp"
#include "sgcat/simplicity.hpp"

using namespace sgcat;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream msg;
  void need(bool c, const std::string& what) {
    if (!c) {
      if (ok) msg.str("");
      ok = false;
      msg << what << "; ";
    }
  }
};

std::string fixture(const std::string& name) { return std::string(SGCAT_FIXTURES) + "/" + name; }

Certificate cert_of(const Semigroup& S, Outcome& o, const std::string& name) {
  std::string missing;
  auto c = find_certificate(S, {}, &missing);
  o.need(c.has_value(), name + ": no duals (" + missing + ")");
  return c ? *c : Certificate{};
}

std::string first(const Report& r) { return r.failures.empty() ? "(no witness)" : r.failures[0]; }

// 1. duals and Axioms I-IV; Axiom III fails on the zero category
void c1(Outcome& o) {
  int adj = 0;
  for (auto [name, S] : std::vector<std::pair<std::string, Semigroup>>{
           {"bimod(k)", fx::bk()}, {"bimod(k[x]/x2)", fx::bdual()}, {"group(Z2,GF2)", fx::gz2()}})
    for (int x = 0; x < S.n(); ++x) {
      for (bool left : {false, true}) {
        auto a = left ? find_left_dual(S, x) : find_dual(S, x);
        o.need(a.has_value(), name + ": no dual of " + S.C.labels[x]);
        if (!a) continue;
        AdjReport r = verify_adjunction(S, *a);
        o.need(r.I.pass && r.II.pass && r.III.pass && r.IV.pass, name + ": axioms fail for " + S.C.labels[x]);
        ++adj;
      }
    }
  Semigroup Z = fx::zero();
  std::string w;
  for (int x = 0; x < Z.n(); ++x) {
    o.need(!find_dual(Z, x), "zero: unexpected dual of " + Z.C.labels[x]);
    AdjReport r = verify_adjunction(Z, zero_adjunction(Z, {x}, {x}));
    o.need(!r.III.pass && !r.III.failures.empty(), "zero: Axiom III holds at " + Z.C.labels[x]);
    if (!r.III.failures.empty()) w = r.III.failures[0];
  }
  o.msg << adj << " adjunctions verified; zero category Axiom III witness: " << w;
}

// 2. right-module transformations y⊠- => y⊠- on C({y,0})
void c2(Outcome& o) {
  Semigroup S = fx::lin();
  Functor Fy = Functor::left({0});
  size_t nat = nat_module_space(S, Flavor::RightModule, Fy, Fy).size();
  size_t plain = nat_module_space(S, Flavor::Plain, Fy, Fy).size();
  int end = S.C.homdim(0, 0);
  o.need(nat == 2 && end == 1, "dim Nat = " + std::to_string(nat) + ", expected 2");
  o.msg << "dim Nat_right-module(y⊠-, y⊠-) = " << nat << ", dim End(y) = " << end
        << ", without equivariance " << plain;
}

// 3. ansatz, bar and general units agree
void c3(Outcome& o) {
  int n = 0;
  for (auto& [name, S] : fx::rigid()) {
    Certificate c = cert_of(S, o, name);
    if (!o.ok) return;
    Ansatz r = unit_ansatz(S, Side::Right, &c), l = unit_ansatz(S, Side::Left, &c);
    std::vector<std::pair<std::string, Presheaf>> us{{"right ansatz", r.P}, {"left ansatz", l.P}};
    for (int F = 0; F < S.n(); ++F)
      if (is_liberal(S, F).liberal) {
        us.push_back({"bar(" + S.C.labels[F] + ")", unit_bar(S, F, &c).P});
        break;
      }
    us.push_back({"general", unit_general(S, &c).P});
    for (size_t i = 0; i < us.size(); ++i)
      for (size_t j = i + 1; j < us.size(); ++j)
        o.need(presheaf_iso(S.C, us[i].second, us[j].second).status == IsoStatus::Iso,
               name + ": " + us[i].first + " not isomorphic to " + us[j].first);
    UnitReport u = unit_verify(S, us.back().second, c);
    o.need(u.unital && u.left.pass && u.right.pass, name + ": unit_verify: " + u.note);
    AnsatzIso ai = ansatz_iso(S, c, r, l);
    o.need(ai.report.pass, name + ": Ψ/Φ: " + first(ai.report));
    o.need(pmap_equal(pmap_compose(S.C, ai.Phi, ai.Psi), pmap_identity(r.P)) &&
               pmap_equal(pmap_compose(S.C, ai.Psi, ai.Phi), pmap_identity(l.P)),
           name + ": ΦΨ or ΨΦ is not the identity");
    n += int(us.size());
  }
  o.msg << n << " unit presheaves over " << fx::rigid().size() << " fixtures pairwise isomorphic, unital, ΦΨ = ΨΦ = id";
}

// 4. finite tensor verdicts
void c4(Outcome& o) {
  struct Row {
    std::string name;
    Semigroup S;
    bool yes;
    int end;
    std::string cert;
  };
  std::vector<Row> rows{{"bimod(k)", fx::bk(), true, 1, ""},
                        {"group(Z2,GF2)", fx::gz2(), true, 1, ""},
                        {"bimod(k[x]/x2)", fx::bdual(), false, 2, "nonzero stable ideal in Rad"},
                        {"bimod(kxk)", fx::bkk(), false, -1, "left: not transitive"}};
  for (auto& r : rows) {
    Certificate c = cert_of(r.S, o, r.name);
    if (!o.ok) return;
    TensorVerdict v = decide_finite_tensor(r.S, c);
    o.need(v.yes == r.yes, r.name + ": verdict " + (v.yes ? "yes" : "no"));
    if (r.end > 0) o.need(v.unit.end_dim == r.end, r.name + ": dim End(unit) = " + std::to_string(v.unit.end_dim));
    o.need(r.cert.empty() || v.evidence.find(r.cert) != std::string::npos, r.name + ": evidence " + v.evidence);
    o.need(v.consistent, r.name + ": verdict and unit disagree");
    o.msg << r.name << " " << (v.yes ? "yes" : "no") << " (End(unit) " << v.unit.end_dim << "); ";
  }
}

// 5. Perron-Frobenius data
void c5(Outcome& o) {
  std::vector<std::tuple<std::string, Semigroup, double>> one{
      {"bimod(k)", fx::bk(), 1}, {"bimod(k[x]/x2)", fx::bdual(), 2}, {"group(Z2,GF2)", fx::gz2(), 2},
      {"group(Z3,GF3)", fx::gz3(), 3}};
  for (auto& [name, S, mult] : one) {
    PFIdempotent d = pf_idempotent(S);
    o.need(std::abs(d.lambda - mult) <= 1e-12, name + ": λ = " + std::to_string(d.lambda));
    o.need(d.idem_err <= 1e-9, name + ": |E²-E| = " + std::to_string(d.idem_err));
    o.msg << name << " λ=" << d.lambda << "; ";
  }
  int km = 0;
  for (auto& [name, S] : fx::rigid()) {
    if (!stability_report(regular_module(S)).transitive || !jcell_trivial(S).trivial) continue;
    PFIdempotent d = pf_idempotent(S);
    std::vector<Eigen::MatrixXi> act;
    for (int F = 0; F < S.n(); ++F) act.push_back(gr_action(S, {F}));
    KMReport r = km_check(act, d.e);
    o.need(r.pass(), name + ": km_check fails");
    ++km;
  }
  o.need(km > 0, "no transitive fixture");
  o.msg << "km_check on " << km << " transitive fixtures";
}

// 6. unital lift on disimple fixtures, zero action rejected
void c6(Outcome& o) {
  int n = 0;
  for (auto& [name, S] : fx::rigid()) {
    Certificate c = cert_of(S, o, name);
    if (!o.ok) return;
    if (!decide_finite_tensor(S, c).yes) continue;
    LiftReport L = unital_lift_check(S, regular_module(S), c);
    o.need(L.pass, name + ": lift fails: " + L.precondition + first(L.theta) + " " + first(L.roundtrip));
    ++n;
  }
  o.need(n >= 3, "fewer than three disimple fixtures");
  Document d = load_document_file(fixture("bimod_dualnumbers_zero_action.json"));
  o.need(d.module.has_value(), "zero-action fixture has no module");
  if (!d.module) return;
  Certificate c = cert_of(d.S, o, "bimod(k[x]/x2)");
  if (!o.ok) return;
  LiftReport z = unital_lift_check(d.S, *d.module, c);
  o.need(!z.pass && z.precondition.find("S⋆M != M") != std::string::npos, "zero action not rejected");
  o.msg << "lift holds on " << n << " disimple fixtures; zero action: " << z.precondition;
}

// 7. coherent realizations; semisimplification refuted
void c7(Outcome& o) {
  int n = 0;
  for (auto& [name, S] : fx::rigid()) {
    Certificate c = cert_of(S, o, name);
    if (!o.ok) return;
    ModuleCat Mo = regular_module(S);
    for (int F = 0; F < S.n(); ++F)
      for (const Adjunction& a : {c.right[F], c.left[F]}) {
        Realization r = adjunction_realization(Mo, a);
        if (r.status != RealStatus::Found) {
          o.need(false, name + ": no realization for " + S.C.labels[F] + ": " + r.reason);
          continue;
        }
        o.need(r.coherence.pass, name + ": coherence: " + first(r.coherence));
        o.need(r.triangles.pass && r.naturality.pass, name + ": triangles: " + first(r.triangles));
        ++n;
      }
  }
  Document d = load_document_file(fixture("semisimplification.json"));
  o.need(d.module.has_value(), "semisimplification fixture has no module");
  if (!d.module) return;
  auto a = find_dual(d.S, 0);
  o.need(a.has_value(), "semisimplification: no dual");
  if (!a) return;
  Realization r = adjunction_realization(*d.module, *a);
  o.need(r.status == RealStatus::Refuted, "semisimplification: " + real_status_str(r.status));
  o.msg << n << " coherent realizations; semisimplification refuted: " << r.reason;
}

// 8. traces
void c8(Outcome& o) {
  std::vector<std::pair<std::string, Semigroup>> one{
      {"k", fx::bk()},
      {"k[x]/x2", fx::comm()},
      {"GF2[Z2]", fx::gz2()},
      {"GF3[Z3]", fx::gz3()},
      {"Q[Z3]", gen_comm_algebra(group_algebra(fx::Q(), cyclic_group(3)))},
      {"QxQ", gen_comm_algebra(algebra_k_times_k(fx::Q()))}};
  for (auto& [name, S] : one) {
    int t = trace_k(S.C).dim, d = S.C.homdim(0, 0);
    o.need(t == d, name + ": dim Tr = " + std::to_string(t) + ", dim A = " + std::to_string(d));
    o.msg << name << " " << t << "; ";
  }
  Semigroup S = fx::comm();
  Certificate c = cert_of(S, o, "comm");
  if (!o.ok) return;
  Quotient q = enriched_trace(S, c);
  Presheaf U = unit_general(S, &c).P;
  o.need(q.P.total() == 2, "enriched trace has dimension " + std::to_string(q.P.total()));
  o.need(presheaf_iso(S.C, q.P, U).status == IsoStatus::Iso, "enriched trace is not the unit");
  o.msg << "enriched trace dim " << q.P.total() << " ≅ unit";
}

// 9. stability report against the exhaustive ideal search
void c9(Outcome& o) {
  std::vector<std::pair<std::string, ModuleCat>> mods;
  std::vector<std::pair<std::string, Semigroup>> ss{{"bimod(k)", fx::bk()},     {"bimod(k[x]/x2)", fx::bdual()},
                                                    {"bimod(kxk)", fx::bkk()},  {"group(Z2,GF2)", fx::gz2()},
                                                    {"group(Z3,GF3)", fx::gz3()}, {"C({y,0})", fx::lin()},
                                                    {"zero", fx::zero()},       {"comm(k[x]/x2)", fx::comm()},
                                                    {"bimod(k)+bimod(k)", gen_block_sum(fx::bk(), fx::bk())}};
  for (auto& [name, S] : ss) {
    if (S.n() > 4) continue;
    mods.push_back({name, regular_module(S)});
    mods.push_back({name + " reversed", regular_module(reverse(S))});
  }
  for (const char* f : {"semisimplification.json", "bimod_dualnumbers_zero_action.json"}) {
    Document d = load_document_file(fixture(f));
    if (d.module) mods.push_back({f, *d.module});
  }
  int yes = 0;
  for (auto& [name, Mo] : mods) {
    bool a = stability_report(Mo).simple_transitive;
    std::string w;
    bool b = simple_transitive_oracle(Mo, &w);
    o.need(a == b, name + ": report " + std::to_string(a) + " oracle " + std::to_string(b) + " " + w);
    yes += a;
  }
  o.msg << mods.size() << " module categories agree (" << yes << " simple transitive)";
}

// 10. single perturbations are detected
void c10(Outcome& o) {
  {
    Semigroup S = fx::bdual();
    for (auto& b : S.assoc[0].blk)
      for (auto& q : b) q *= 2;
    Report r = validate_semigroup(S);
    o.need(!r.pass && !r.failures.empty(), "associator scaling not detected");
    o.msg << "associator: " << first(r) << "; ";
  }
  {
    Semigroup S = fx::bdual();
    // one coefficient of one composite
    Vec& v = S.C.cmp[0][1];
    v[0] += 1;
    Report r = validate_presentation(S.C);
    o.need(!r.pass && !r.failures.empty(), "structure-constant edit not detected");
    o.msg << "structure constant: " << first(r) << "; ";
  }
  {
    Semigroup D = fx::bdual();
    auto ad = find_dual(D, 0);
    o.need(ad.has_value(), "no dual");
    if (!ad) return;
    Adjunction e = *ad;
    for (auto& m : e.eps_r.comp) m = mor_scale(D.C, Q(3), m);
    AdjReport r = verify_adjunction(D, e);
    o.need(!r.III.pass && !r.III.failures.empty(), "counit scaling not detected");
    o.msg << "counit: " << first(r.III) << "; ";
  }
  {
    ModuleCat Mo = regular_module(fx::bdual());
    Semigroup& T = Mo.T;
    Mor& a = T.assoc[(size_t(0) * T.n() + 0) * T.n() + Mo.idx(0)];
    a.blk[0][1] += 1;
    T.finalize();
    Report r = validate_module(Mo);
    o.need(!r.pass && !r.failures.empty(), "module multiplication edit not detected");
    o.msg << "module: " << first(r);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::function<void(Outcome&)>> all{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  int n = argc > 1 ? std::atoi(argv[1]) : 0;
  std::vector<int> which;
  if (n >= 1 && n <= 10)
    which = {n};
  else
    for (int i = 1; i <= 10; ++i) which.push_back(i);
  bool ok = true;
  for (int i : which) {
    Outcome o;
    try {
      all[i - 1](o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.msg.str("");
      o.msg << "exception: " << e.what();
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i << ": " << o.msg.str() << "\n";
    ok = ok && o.ok;
  }
  return ok ? 0 : 1;
}
