#include "doctest.h"
#include "fixtures.hpp"
#include "sgcat/decat.hpp"
#include "sgcat/simplicity.hpp"

using namespace sgcat;

TEST_SUITE("decat") {
  TEST_CASE("action matrices") {
    Semigroup Z = fx::zero();
    for (int F = 0; F < Z.n(); ++F) CHECK(gr_action(Z, {F}).isZero());
    Semigroup D = fx::bdual();
    Eigen::MatrixXi N = gr_action(D, {0});
    REQUIRE(N.rows() == 1);
    CHECK(N(0, 0) == 2);
    CHECK(gr_action(D, {0}, ActSide::Right)(0, 0) == 2);
    // P_ij ⊠ P_kl = δ_jk P_il
    Semigroup K = fx::bkk();
    REQUIRE(K.n() == 4);
    for (int F = 0; F < 4; ++F) {
      Eigen::MatrixXi M = gr_action(K, {F});
      int i = F / 2, j = F % 2;
      for (int X = 0; X < 4; ++X)
        for (int Y = 0; Y < 4; ++Y) {
          int k = X / 2, l = X % 2;
          int want = (j == k && Y == i * 2 + l) ? 1 : 0;
          CHECK(M(Y, X) == want);
        }
    }
    Eigen::MatrixXi sum = gr_sum(K);
    CHECK(sum.sum() == 8);
  }

  TEST_CASE("J-cells") {
    CHECK(jcell_trivial(fx::bk()).trivial);
    CHECK(jcell_trivial(fx::bkk()).trivial);
    JCell j = jcell_trivial(gen_block_sum(fx::bk(), fx::bk()));
    CHECK_FALSE(j.trivial);
    CHECK(j.F >= 0);
    CHECK(j.G >= 0);
  }

  TEST_CASE("spectral radius and period") {
    Eigen::MatrixXd N(2, 2);
    N << 0, 1, 1, 0;
    CHECK(spectral_radius(N, 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
    Eigen::MatrixXi P(2, 2);
    P << 0, 1, 1, 0;
    CHECK(matrix_period(P) == 2);
    Eigen::MatrixXi A(2, 2);
    A << 1, 1, 1, 0;
    CHECK(matrix_period(A) == 1);
  }

  TEST_CASE("Perron-Frobenius idempotent") {
    PFIdempotent d = pf_idempotent(fx::bdual());
    CHECK(d.lambda == doctest::Approx(2.0).epsilon(1e-12));
    REQUIRE(d.e.size() == 1);
    CHECK(d.e(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.idem_err < 1e-9);
    PFIdempotent k = pf_idempotent(fx::bk());
    CHECK(k.lambda == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k.e(0) == doctest::Approx(1.0).epsilon(1e-12));
    PFIdempotent kk = pf_idempotent(fx::bkk());
    Eigen::MatrixXd E2 = kk.E * kk.E;
    CHECK((E2 - kk.E).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(kk.full_support);
  }

  TEST_CASE("KM check") {
    for (auto& [name, S] : fx::rigid()) {
      CAPTURE(name);
      if (!stability_report(regular_module(S)).transitive) continue;
      PFIdempotent d = pf_idempotent(S);
      std::vector<Eigen::MatrixXi> act;
      for (int F = 0; F < S.n(); ++F) act.push_back(gr_action(S, {F}));
      CHECK(km_check(act, d.e).pass());
    }
    std::vector<Eigen::MatrixXi> act{gr_action(fx::bdual(), {0})};
    Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);
    CHECK_FALSE(km_check(act, zero).cone);
    Eigen::VectorXd one = Eigen::VectorXd::Ones(1);
    KMReport r = km_check(act, one);
    CHECK(r.cone);
    CHECK_FALSE(r.idempotent);
    CHECK(r.idem_err == doctest::Approx(2.0));
  }
}
