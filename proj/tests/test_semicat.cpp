#include "doctest.h"
#include "fixtures.hpp"

using namespace sgcat;

TEST_SUITE("semicat") {
  TEST_CASE("generated categories validate") {
    for (auto& [name, S] : fx::rigid()) {
      CAPTURE(name);
      CHECK(validate_presentation(S.C).pass);
      CHECK(validate_semigroup(S).pass);
    }
    CHECK(validate_semigroup(fx::zero()).pass);
    CHECK(validate_semigroup(fx::lin()).pass);
  }

  TEST_CASE("generator shapes") {
    Semigroup Z = fx::zero();
    CHECK(Z.n() == 2);
    for (auto& t : Z.tens) CHECK(t.empty());
    Semigroup L = fx::lin();
    CHECK(L.n() == 2);
    CHECK(L.C.homdim(0, 0) == 1);
    CHECK(L.C.homdim(1, 1) == 1);
    CHECK(L.C.homdim(0, 1) == 0);
    Semigroup D = fx::bdual();
    CHECK(D.n() == 1);
    CHECK(D.C.homdim(0, 0) == 4);
    CHECK(D.t(0, 0).size() == 2);
    Semigroup G = fx::gz2();
    CHECK(G.C.homdim(0, 0) == 2);
    CHECK(G.t(0, 0).size() == 2);
    CHECK_THROWS(gen_linear_semigroup(fx::Q(), {"a", "b"}, {{0, 1}, {0, 0}}));
  }

  TEST_CASE("scaled associator breaks the pentagon") {
    Semigroup S = fx::bdual();
    for (auto& b : S.assoc[0].blk)
      if (!b.empty())
        for (auto& q : b) q *= 2;
    Report r = validate_semigroup(S);
    CHECK_FALSE(r.pass);
    bool pent = false;
    for (auto& f : r.failures) pent = pent || f.find("pentagon fails on (P11,P11,P11,P11)") != std::string::npos;
    CHECK(pent);
  }

  TEST_CASE("tensor of morphisms") {
    for (auto& [name, S] : fx::rigid()) {
      CAPTURE(name);
      for (int x = 0; x < S.n(); ++x)
        for (int y = 0; y < S.n(); ++y)
          CHECK(mor_equal(S.C, tensor_mor(S, id_mor(S.C, {x}), id_mor(S.C, {y})), id_mor(S.C, S.t(x, y))));
    }
    Semigroup Z = fx::zero();
    Mor f = basis_mor(Z.C, 0, 1, 0);
    Mor t = tensor_mor(Z, f, f);
    CHECK(t.src.empty());
    CHECK(t.dst.empty());
  }

  TEST_CASE("k x k bimodule tensor rule") {
    // P_ij ⊠ P_kl = δ_jk P_il ; objects in order P11, P12, P21, P22
    Semigroup S = fx::bkk();
    auto id = [](int i, int j) { return 2 * i + j; };
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) {
            Obj t = S.t(id(i, j), id(k, l));
            if (j == k) CHECK(t == Obj{id(i, l)});
            else CHECK(t.empty());
          }
  }

  TEST_CASE("k x k bimodule tensor of morphisms matches the underlying maps") {
    // every Hom(P_ij, P_kl) is k·δ; f⊠g on P_ij⊠P_jl is the product of the scalars
    Semigroup S = fx::bkk();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        if (S.t(a, b).empty()) continue;
        Mor f = mor_scale(S.C, Q(3), id_mor(S.C, {a})), g = mor_scale(S.C, Q(5), id_mor(S.C, {b}));
        CHECK(mor_equal(S.C, tensor_mor(S, f, g), mor_scale(S.C, Q(15), id_mor(S.C, S.t(a, b)))));
      }
  }

  TEST_CASE("fullness on the linearized semigroup {y,0}") {
    Semigroup S = fx::lin();
    Functor Fy = Functor::left({0});
    // with equivariance, τ_0 is forced to τ_y ⊠ id_0
    CHECK(nat_module_space(S, Flavor::RightModule, Fy, Fy).size() == 1);
    CHECK(nat_module_space(S, Flavor::Plain, Fy, Fy).size() == 2);
    CHECK(S.C.homdim(0, 0) == 1);
  }

  TEST_CASE("fullness on a rigid category") {
    Semigroup S = fx::bk();
    CHECK(nat_module_space(S, Flavor::RightModule, Functor::left({0}), Functor::left({0})).size() == 1);
    Semigroup D = fx::bdual();
    CHECK(nat_module_space(D, Flavor::RightModule, Functor::left({0}), Functor::left({0})).size() ==
          size_t(D.C.homdim(0, 0)));
    // zero functor
    CHECK(nat_module_space(D, Flavor::RightModule, Functor::left({}), Functor::left({})).empty());
  }

  TEST_CASE("bracketings") {
    Semigroup S = fx::bdual();
    Obj X{0};
    TreeP a = N(N(L(X), L(X)), L(X)), b = N(L(X), N(L(X), L(X)));
    Mor r = rebracket(S, a, b);
    CHECK(mor_equal(S.C, r, assoc_mor(S, X, X, X)));
    CHECK(mor_equal(S.C, compose(S.C, rebracket(S, b, a), r), id_mor(S.C, tree_obj(S, a))));
  }
}
