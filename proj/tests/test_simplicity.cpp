#include "doctest.h"
#include "fixtures.hpp"
#include "sgcat/modlift.hpp"
#include "sgcat/simplicity.hpp"

using namespace sgcat;

namespace {

// n objects, every Hom one dimensional, every composite the basis vector
Category matrix_category(int n) {
  Category C;
  C.field = fx::Q();
  for (int i = 0; i < n; ++i) C.labels.push_back("E" + std::to_string(i));
  C.hd.assign(size_t(n) * n, 1);
  C.allocate();
  for (auto& cell : C.cmp)
    for (auto& v : cell) v = Vec{1};
  for (auto& v : C.ident) v = Vec{1};
  return C;
}

Certificate cert_of(const Semigroup& S) {
  auto c = find_certificate(S);
  REQUIRE(c);
  return *c;
}

}  // namespace

TEST_SUITE("simplicity") {
  TEST_CASE("ideal closure") {
    ModuleCat Mo = regular_module(fx::bdual());
    Category M = Mo.base();
    int full = full_ideal(M).total();
    CHECK(ideal_closure(Mo, {{0, 0, M.ident[0]}}).total() == full);
    CHECK(ideal_closure(Mo, {}).total() == 0);
    Ideal rad = radical(M);
    REQUIRE(rad.total() > 0);
    Ideal I = ideal_closure(Mo, {{0, 0, rad.sub[0].col(0)}});
    CHECK(I.total() > 0);
    for (int c = 0; c < I.sub[0].cols; ++c) CHECK(ideal_contains(M, rad, 0, 0, I.sub[0].col(c)));
    CHECK(ideal_is_closed(M, I));
  }

  TEST_CASE("stability of regular modules") {
    StabilityReport k = stability_report(regular_module(fx::bk()));
    CHECK(k.transitive);
    CHECK(k.simple_transitive);
    StabilityReport d = stability_report(regular_module(fx::bdual()));
    CHECK(d.transitive);
    CHECK_FALSE(d.simple_transitive);
    CHECK(d.core.total() > 0);
    CHECK(d.certificate.find("nonzero stable ideal") != std::string::npos);
    StabilityReport kk = stability_report(regular_module(fx::bkk()));
    CHECK_FALSE(kk.transitive);
    CHECK(kk.wx >= 0);
    CHECK(kk.wy >= 0);
    StabilityReport z = stability_report(regular_module(fx::zero()));
    CHECK_FALSE(z.transitive);
  }

  TEST_CASE("stability agrees with the ideal search") {
    std::vector<Semigroup> ss{fx::bk(), fx::bdual(), fx::bkk(), fx::gz2(), fx::gz3(), fx::lin(), fx::comm()};
    for (const auto& S : ss) {
      for (const auto& T : {S, reverse(S)}) {
        ModuleCat Mo = regular_module(T);
        StabilityReport r = stability_report(Mo);
        if (!r.transitive) continue;
        CHECK(r.simple_transitive == simple_transitive_oracle(Mo));
      }
    }
  }

  TEST_CASE("stability on a module that is not a copy of S") {
    ModuleCat Mo = semisimplification_module(fx::Q());
    StabilityReport r = stability_report(Mo);
    // A is never a summand of F⋆X
    CHECK_FALSE(r.transitive);
    CHECK(r.wy == 0);
    CHECK(r.simple_transitive == simple_transitive_oracle(Mo));
    Category M = Mo.base();
    CHECK(ideal_closure(Mo, {{0, 0, M.ident[0]}}).total() == full_ideal(M).total());
  }

  TEST_CASE("finite tensor verdicts") {
    struct Row {
      const char* name;
      Semigroup S;
      bool yes;
      int end;
    };
    std::vector<Row> rows{{"bk", fx::bk(), true, 1}, {"gz2", fx::gz2(), true, 1}, {"gz3", fx::gz3(), true, 1},
                          {"bdual", fx::bdual(), false, 2}};
    for (auto& r : rows) {
      CAPTURE(r.name);
      TensorVerdict v = decide_finite_tensor(r.S, cert_of(r.S));
      CHECK(v.yes == r.yes);
      CHECK(v.unit.end_dim == r.end);
      CHECK(v.consistent);
    }
    TensorVerdict kk = decide_finite_tensor(fx::bkk(), cert_of(fx::bkk()));
    CHECK_FALSE(kk.yes);
    CHECK_FALSE(kk.left.transitive);
    CHECK(kk.consistent);
  }

  TEST_CASE("k-linear trace") {
    CHECK(trace_k(fx::lin().C).dim == 2);
    Category E = matrix_category(2);
    REQUIRE(validate_presentation(E).pass);
    CHECK(trace_k(E).dim == 1);
    CHECK(trace_k(matrix_category(3)).dim == 1);
    CHECK(trace_k(fx::comm().C).dim == 2);
    Semigroup G = gen_comm_algebra(group_algebra(fx::Q(), cyclic_group(3)));
    CHECK(trace_k(G.C).dim == 3);
    TraceResult t = trace_k(fx::comm(), true);
    REQUIRE(t.mult);
    CHECK(t.mult->size() == 4);
  }

  TEST_CASE("enriched trace") {
    Semigroup S = fx::comm();
    Certificate c = cert_of(S);
    Quotient q = enriched_trace(S, c);
    CHECK(q.P.total() == 2);
    CHECK(presheaf_iso(S.C, q.P, unit_general(S, &c).P).status == IsoStatus::Iso);
    Semigroup K = fx::bk();
    CHECK_THROWS_AS(enriched_trace(K, cert_of(K)), std::invalid_argument);
  }
}
