#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sgcat/semigroup.hpp"

namespace sgcat {

enum class ActSide { Left, Right };  // F⊠X or X⊠F

// column X: multiplicities of the indecomposables in F⊠X (or X⊠F)
Eigen::MatrixXi gr_action(const Semigroup& S, const Obj& F, ActSide side = ActSide::Left);
// N = sum over indecomposable F of gr_action(F)
Eigen::MatrixXi gr_sum(const Semigroup& S, ActSide side = ActSide::Left);

struct JCell {
  bool trivial = false;
  int F = -1, G = -1;  // F not a summand of any H⊠G⊠K
};
JCell jcell_trivial(const Semigroup& S);

struct PFIdempotent {
  double lambda = 0;
  Eigen::VectorXd e;
  Eigen::MatrixXd E;
  double tol = 1e-9;
  double idem_err = 0;  // max |E² - E|
  int period = 1;
  bool full_support = false;
  int iterations = 0;
  std::string note;
};

// power iteration for the spectral radius of a nonnegative matrix (on N + I)
double spectral_radius(const Eigen::MatrixXd& N, double tol, int* iters = nullptr);
int matrix_period(const Eigen::MatrixXi& N);
// lim ((I + N/λ)/2)^k by repeated squaring
Eigen::MatrixXd pf_limit(const Eigen::MatrixXd& N, double lambda);

// throws std::invalid_argument unless jcell_trivial(S)
PFIdempotent pf_idempotent(const Semigroup& S, double tol = 1e-12);

struct KMReport {
  bool cone = false;        // e >= 0 and nonzero
  bool idempotent = false;  // M(e)² = M(e)
  bool injective = false;   // on the cone spanned by summands of F⋆X, F in Supp(e)
  double idem_err = 0;
  std::vector<int> support_cone;
  bool pass() const { return cone && idempotent && injective; }
};
// act[F] = integer action matrix of the indecomposable F on the module's Grothendieck group
KMReport km_check(const std::vector<Eigen::MatrixXi>& act, const Eigen::VectorXd& e, double tol = 1e-9);

}  // namespace sgcat
