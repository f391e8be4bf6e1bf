#include "doctest.h"
#include "fixtures.hpp"
#include "sgcat/presheaf.hpp"

using namespace sgcat;

namespace {

Certificate cert_of(const Semigroup& S) {
  auto c = find_certificate(S);
  REQUIRE(c);
  return *c;
}

}  // namespace

TEST_SUITE("presheaf") {
  TEST_CASE("Yoneda objects convolve like the tensor product") {
    for (auto& [name, S] : fx::rigid()) {
      CAPTURE(name);
      for (int a = 0; a < S.n(); ++a)
        for (int b = 0; b < S.n(); ++b) {
          Presheaf P = day_convolve(S, representable(S.C, {a}), representable(S.C, {b})).R;
          CHECK(presheaf_iso(S.C, P, representable(S.C, S.t(a, b))).status == IsoStatus::Iso);
        }
    }
  }

  TEST_CASE("Day convolution in the zero category vanishes") {
    Semigroup Z = fx::zero();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) CHECK(day_convolve(Z, representable(Z.C, {a}), representable(Z.C, {b})).R.total() == 0);
  }

  TEST_CASE("dual numbers: Y(X)⊛Y(X) at X") {
    Semigroup S = fx::bdual();
    Presheaf Y = representable(S.C, {0});
    CHECK(day_convolve(S, Y, Y).R.dim[0] == 8);
  }

  TEST_CASE("ansatz presheaves") {
    Semigroup K = fx::bk();
    Certificate ck = cert_of(K);
    Ansatz ak = unit_ansatz(K, Side::Right, &ck);
    CHECK(ak.P.total() == 1);
    CHECK(presheaf_iso(K.C, ak.P, representable(K.C, {0})).status == IsoStatus::Iso);
    Semigroup D = fx::bdual();
    Certificate cd = cert_of(D);
    CHECK(unit_ansatz(D, Side::Right, &cd).P.dim == std::vector<int>{2});
    for (auto& [name, S] : fx::rigid()) {
      CAPTURE(name);
      Certificate c = cert_of(S);
      Ansatz r = unit_ansatz(S, Side::Right, &c), l = unit_ansatz(S, Side::Left, &c);
      CHECK(r.P.dim == l.P.dim);
      AnsatzIso ai = ansatz_iso(S, c, r, l);
      CHECK(ai.report.pass);
    }
  }

  TEST_CASE("Ψ and Φ on the Z/2 example") {
    Semigroup S = fx::gz2();
    Certificate c = cert_of(S);
    Ansatz r = unit_ansatz(S, Side::Right, &c), l = unit_ansatz(S, Side::Left, &c);
    AnsatzIso ai = ansatz_iso(S, c, r, l);
    CHECK(check_pmap(S.C, r.P, l.P, ai.Psi).pass);
    CHECK(pmap_equal(pmap_compose(S.C, ai.Phi, ai.Psi), pmap_identity(r.P)));
  }

  TEST_CASE("bar unit") {
    Semigroup K = fx::bk();
    Certificate ck = cert_of(K);
    CHECK(unit_bar(K, 0, &ck).P.total() == 1);
    Semigroup G = fx::gz2();
    Certificate cg = cert_of(G);
    Quotient b = unit_bar(G, 0, &cg);
    CHECK(b.P.dim == std::vector<int>{1});
    CHECK(presheaf_iso(G.C, b.P, unit_general(G, &cg).P).status == IsoStatus::Iso);
    CHECK_THROWS(unit_bar(fx::zero(), 0, nullptr));
  }

  TEST_CASE("general unit") {
    Semigroup K = fx::bk();
    Certificate ck = cert_of(K);
    CHECK(unit_general(K, &ck).P.total() == 1);
    Semigroup D = fx::bdual();
    Certificate cd = cert_of(D);
    Presheaf U = unit_general(D, &cd).P;
    CHECK(U.dim == std::vector<int>{2});
    CHECK(presheaf_iso(D.C, U, unit_ansatz(D, Side::Right, &cd).P).status == IsoStatus::Iso);
  }

  TEST_CASE("unitality") {
    Semigroup G = fx::gz2();
    Certificate cg = cert_of(G);
    UnitReport rg = unit_verify(G, unit_general(G, &cg).P, cg);
    CHECK(rg.unital);
    CHECK(rg.end_dim == 1);
    CHECK(rg.simple);
    Semigroup D = fx::bdual();
    Certificate cd = cert_of(D);
    UnitReport rd = unit_verify(D, unit_general(D, &cd).P, cd);
    CHECK(rd.unital);
    CHECK(rd.end_dim == 2);
    CHECK_FALSE(rd.simple);
    UnitReport ry = unit_verify(D, representable(D.C, {0}), cd);
    CHECK_FALSE(ry.unital);
  }

  TEST_CASE("liberal objects") {
    CHECK(is_liberal(fx::bdual(), 0).liberal);
    CHECK(is_liberal(fx::gz2(), 0).liberal);
    Semigroup S3 = gen_linear_semigroup(fx::Q(), {"x", "y", "0"}, {{2, 2, 2}, {2, 1, 2}, {2, 2, 2}});
    CHECK_FALSE(is_liberal(S3, 0).liberal);
    CHECK(is_liberal(fx::lin(), 0).liberal);
  }

  TEST_CASE("covers") {
    Semigroup D = fx::bdual();
    Presheaf Y = representable(D.C, {0});
    CoverFlags f = cover_and_flags(D.C, Y);
    CHECK(f.projective);
    CHECK(f.cover == Obj{0});
    Semigroup G = fx::gz2();
    CHECK(cover_and_flags(G.C, representable(G.C, {0})).injective);
    Presheaf top = quotient(D.C, Y, radical_submodule(D.C, Y)).P;
    CHECK(top.total() == 1);
    CoverFlags t = cover_and_flags(D.C, top);
    CHECK(t.cover == Obj{0});
    CHECK_FALSE(t.projective);
    CHECK(top_dims(D.C, top) == std::vector<int>{1});
  }
}
