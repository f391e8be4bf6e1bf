#include "doctest.h"
#include "fixtures.hpp"
#include "sgcat/rigidity.hpp"

using namespace sgcat;

namespace {

Transform scaled(const Semigroup& S, const Transform& t, const Q& c) {
  Transform r = t;
  for (auto& m : r.comp) m = mor_scale(S.C, c, m);
  return r;
}

}  // namespace

TEST_SUITE("rigidity") {
  TEST_CASE("duals exist and pass the axioms") {
    for (auto& [name, S] : fx::rigid()) {
      CAPTURE(name);
      for (int x = 0; x < S.n(); ++x) {
        auto r = find_dual(S, x);
        REQUIRE(r);
        CHECK(verify_adjunction(S, *r).pass());
        auto l = find_left_dual(S, x);
        REQUIRE(l);
        CHECK(verify_adjunction(S, *l).pass());
      }
    }
  }

  TEST_CASE("self-duality in small examples") {
    auto a = find_dual(fx::bk(), 0);
    REQUIRE(a);
    CHECK(a->Fd == Obj{0});
    auto g = find_dual(fx::gz2(), 0);
    REQUIRE(g);
    CHECK(g->Fd == Obj{0});
  }

  TEST_CASE("zero semigroup category") {
    Semigroup Z = fx::zero();
    for (int x = 0; x < Z.n(); ++x) {
      CHECK_FALSE(find_dual(Z, x).has_value());
      AdjReport r = verify_adjunction(Z, zero_adjunction(Z, {x}, {x}));
      CHECK(r.I.pass);
      CHECK(r.II.pass);
      CHECK_FALSE(r.III.pass);
      CHECK_FALSE(r.III.failures.empty());
    }
  }

  TEST_CASE("scaled counit breaks Axiom III only") {
    for (auto S : {fx::bk(), fx::gz2(), fx::bdual()}) {
      auto a = find_dual(S, 0);
      REQUIRE(a);
      Adjunction b = *a;
      b.eps_r = scaled(S, b.eps_r, Q(2));
      AdjReport r = verify_adjunction(S, b);
      CHECK_FALSE(r.III.pass);
      CHECK(r.I.pass);
    }
  }

  TEST_CASE("composite adjunctions") {
    for (auto S : {fx::bk(), fx::gz2()}) {
      auto a = find_dual(S, 0);
      REQUIRE(a);
      Adjunction c = compose_adjunctions(S, *a, *a);
      CHECK(c.F == tensor_obj(S, {0}, {0}));
      CHECK(verify_adjunction(S, c).pass());
    }
  }

  TEST_CASE("composite unit at a 1-dim example") {
    // A = k: every structure map is a scalar; the composite unit is the product of the two units
    Semigroup S = fx::bk();
    auto a = find_dual(S, 0);
    REQUIRE(a);
    Adjunction c = compose_adjunctions(S, *a, *a);
    Vec u = flatten(S.C, a->eta_l.comp[0]);
    Vec uc = flatten(S.C, c.eta_l.comp[0]);
    REQUIRE(u.size() == 1);
    REQUIRE(uc.size() == 1);
    CHECK(uc[0] == u[0] * u[0]);
  }

  TEST_CASE("duality functor") {
    for (auto S : {fx::gz2(), fx::bdual(), fx::bkk()}) {
      auto cert = find_certificate(S);
      REQUIRE(cert);
      for (int x = 0; x < S.n(); ++x) {
        Obj X{x};
        Mor d = dual_mor(S, *cert, id_mor(S.C, X));
        CHECK(mor_equal(S.C, d, id_mor(S.C, dual_obj(*cert, X))));
        for (int y = 0; y < S.n(); ++y)
          CHECK(S.C.homdim(x, y) == mor_dim(S.C, dual_obj(*cert, {y}), dual_obj(*cert, X)));
      }
    }
  }

  TEST_CASE("duality functor respects composition") {
    Semigroup S = fx::bdual();
    auto cert = find_certificate(S);
    REQUIRE(cert);
    const Category& C = S.C;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Mor f = basis_mor(C, 0, 0, i), g = basis_mor(C, 0, 0, j);
        CHECK(mor_equal(C, dual_mor(S, *cert, compose(C, g, f)),
                        compose(C, dual_mor(S, *cert, f), dual_mor(S, *cert, g))));
      }
  }

  TEST_CASE("gauge change gives an invertible comparison") {
    // units scaled by c, counits by 1/c
    for (auto T : {fx::gz2(), fx::bdual()}) {
      auto a1 = find_dual(T, 0);
      REQUIRE(a1);
      Q c = T.C.field.is_prime() ? Q(1) : Q(3);
      Adjunction a2 = *a1;
      a2.eta_l = scaled(T, a2.eta_l, c);
      a2.eta_r = scaled(T, a2.eta_r, c);
      a2.eps_l = scaled(T, a2.eps_l, 1 / c);
      a2.eps_r = scaled(T, a2.eps_r, 1 / c);
      REQUIRE(verify_adjunction(T, a2).pass());
      Mor m = dual_comparison(T, *a1, a2);
      CHECK(mor_inverse(T.C, m).has_value());
    }
  }

  TEST_CASE("Hom isomorphisms preserve dimensions and are invertible") {
    Semigroup S = fx::bkk();
    auto cert = find_certificate(S);
    REQUIRE(cert);
    for (int f = 0; f < S.n(); ++f)
      for (int h = 0; h < S.n(); ++h)
        for (int k = 0; k < S.n(); ++k) {
          Mat m = hom_iso_left(S, cert->right[f], h, k);
          CHECK(m.rows == m.cols);
          if (m.rows) CHECK(inverse(S.C.field, m).has_value());
        }
  }
}
