#include "doctest.h"
#include "fixtures.hpp"
#include "sgcat/modlift.hpp"

using namespace sgcat;

namespace {

Certificate cert_of(const Semigroup& S) {
  auto c = find_certificate(S);
  REQUIRE(c);
  return *c;
}

// regular module with the action on morphisms killed
ModuleCat zero_action(const Semigroup& S) {
  ModuleCat R = regular_module(S);
  Category M = R.base();
  int n = S.n(), m = M.n();
  std::vector<Obj> act(size_t(n) * m);
  std::vector<std::vector<Mor>> amt(size_t(n) * n * m * m);
  std::vector<Mor> mult(size_t(n) * n * m);
  for (int F = 0; F < n; ++F)
    for (int X = 0; X < m; ++X) act[size_t(F) * m + X] = {};
  for (int F = 0; F < n; ++F)
    for (int F2 = 0; F2 < n; ++F2)
      for (int X = 0; X < m; ++X)
        for (int X2 = 0; X2 < m; ++X2)
          amt[((size_t(F) * n + F2) * m + X) * m + X2].assign(
              size_t(S.C.homdim(F, F2)) * M.homdim(X, X2), Mor(Obj{}, Obj{}));
  for (int G = 0; G < n; ++G)
    for (int F = 0; F < n; ++F)
      for (int X = 0; X < m; ++X) mult[(size_t(G) * n + F) * m + X] = Mor(Obj{}, Obj{});
  return make_module(S, M, act, amt, mult);
}

}  // namespace

TEST_SUITE("modlift") {
  TEST_CASE("module validation") {
    for (auto& [name, S] : fx::rigid()) {
      CAPTURE(name);
      CHECK(validate_module(regular_module(S)).pass);
    }
    ModuleCat Mo = regular_module(fx::bdual());
    CHECK(covers_module(Mo));
    ModuleCat Z = zero_action(fx::bdual());
    CHECK(validate_module(Z).pass);
    int miss = -1;
    CHECK_FALSE(covers_module(Z, &miss));
    CHECK(miss == 0);
  }

  TEST_CASE("an edited multiplication cell is detected") {
    ModuleCat Mo = regular_module(fx::bdual());
    Semigroup& T = Mo.T;
    Mor& a = T.assoc[(size_t(0) * T.n() + 0) * T.n() + Mo.idx(0)];
    REQUIRE(!a.blk[0].empty());
    a.blk[0][1] += 1;
    T.finalize();
    Report r = validate_module(Mo);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.failures.empty());
  }

  TEST_CASE("realizations of the regular module") {
    for (auto& [name, S] : fx::rigid()) {
      CAPTURE(name);
      ModuleCat Mo = regular_module(S);
      Certificate c = cert_of(S);
      for (int F = 0; F < S.n(); ++F) {
        Realization r = adjunction_realization(Mo, c.right[F]);
        CHECK(r.status == RealStatus::Found);
        CHECK(r.hat_triangles.pass);
        CHECK(r.triangles.pass);
        CHECK(r.coherence.pass);
        CHECK(r.naturality.pass);
        CHECK(module_triangles(Mo, c.right[F], r.eta, r.eps).pass);
      }
    }
  }

  TEST_CASE("coherence on Z/2") {
    Semigroup S = fx::gz2();
    ModuleCat Mo = regular_module(S);
    Certificate c = cert_of(S);
    Realization r = adjunction_realization(Mo, c.right[0]);
    REQUIRE(r.pass());
    CHECK(coherence_check(Mo, c.right[0], r.eta, r.eps).pass);
    Transform bad = r.eta;
    for (auto& m : bad.comp) m = zero_mor(m.src, m.dst);
    CHECK_FALSE(module_triangles(Mo, c.right[0], bad, r.eps).pass);
  }

  TEST_CASE("semisimplification has no realization") {
    ModuleCat Mo = semisimplification_module(fx::Q());
    CHECK(validate_module(Mo).pass);
    Semigroup S = gen_linear_semigroup(fx::Q(), {"*"}, {{0}});
    auto adj = find_dual(S, 0);
    REQUIRE(adj);
    Realization r = adjunction_realization(Mo, *adj);
    CHECK(r.status == RealStatus::Refuted);
    CHECK(r.reason.find("= 2") != std::string::npos);
  }

  TEST_CASE("presheaf extension and restriction") {
    ModuleCat Mo = regular_module(fx::bdual());
    Category M = Mo.base();
    Presheaf Y = representable(M, {0});
    Presheaf E = extend_presheaf(Mo.T.C, Y, Mo.nS);
    CHECK(check_presheaf(Mo.T.C, E).pass);
    CHECK(E.total() == Y.total());
    Presheaf R = restrict_presheaf(M, E, Mo.nS);
    CHECK(R.dim == Y.dim);
    CHECK(presheaf_iso(M, R, Y).status == IsoStatus::Iso);
  }

  TEST_CASE("unital lift") {
    for (auto S : {fx::bk(), fx::gz2(), fx::gz3(), fx::bdual()}) {
      LiftReport L = unital_lift_check(S, regular_module(S), cert_of(S));
      CHECK(L.precondition.empty());
      CHECK(L.theta.pass);
      CHECK(L.roundtrip.pass);
      CHECK(L.pass);
    }
    Semigroup D = fx::bdual();
    LiftReport z = unital_lift_check(D, zero_action(D), cert_of(D));
    CHECK_FALSE(z.pass);
    CHECK(z.precondition.find("S⋆M != M") != std::string::npos);
  }

  TEST_CASE("projectivizing") {
    CHECK(projectivizing_check(fx::gz2(), regular_module(fx::gz2())).projectivizing);
    CHECK(projectivizing_check(fx::bk(), regular_module(fx::bk())).projectivizing);
    ProjReport d = projectivizing_check(fx::bdual(), regular_module(fx::bdual()));
    CHECK_FALSE(d.projectivizing);
    CHECK_FALSE(d.witness.empty());
  }
}
