#include "sgcat/decat.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sgcat {

Eigen::MatrixXi gr_action(const Semigroup& S, const Obj& F, ActSide side) {
  int n = S.n();
  Eigen::MatrixXi M = Eigen::MatrixXi::Zero(n, n);
  for (int f : F)
    for (int x = 0; x < n; ++x)
      for (int y : side == ActSide::Left ? S.t(f, x) : S.t(x, f)) M(y, x) += 1;
  return M;
}

Eigen::MatrixXi gr_sum(const Semigroup& S, ActSide side) {
  Eigen::MatrixXi N = Eigen::MatrixXi::Zero(S.n(), S.n());
  for (int f = 0; f < S.n(); ++f) N += gr_action(S, {f}, side);
  return N;
}

JCell jcell_trivial(const Semigroup& S) {
  int n = S.n();
  JCell r;
  for (int g = 0; g < n; ++g) {
    // summands of H⊠G, then of (H⊠G)⊠K
    std::vector<char> mid(n, 0), out(n, 0);
    for (int h = 0; h < n; ++h)
      for (int y : S.t(h, g)) mid[y] = 1;
    for (int y = 0; y < n; ++y)
      if (mid[y])
        for (int k = 0; k < n; ++k)
          for (int z : S.t(y, k)) out[z] = 1;
    for (int f = 0; f < n; ++f)
      if (!out[f]) {
        r.F = f;
        r.G = g;
        return r;
      }
  }
  r.trivial = true;
  return r;
}

double spectral_radius(const Eigen::MatrixXd& N, double tol, int* iters) {
  int n = int(N.rows());
  if (n == 0) return 0;
  Eigen::MatrixXd A = N + Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n) / std::sqrt(double(n));
  double mu = 0;
  int it = 0;
  for (; it < 100000; ++it) {
    Eigen::VectorXd y = A * x;
    double m = x.dot(y);
    x = y / y.norm();
    if (it > 0 && std::abs(m - mu) <= tol * std::max(1.0, std::abs(m))) {
      mu = m;
      break;
    }
    mu = m;
  }
  if (iters) *iters = it;
  return mu - 1;
}

int matrix_period(const Eigen::MatrixXi& N) {
  int n = int(N.rows());
  Eigen::MatrixXi B = (N.array() > 0).cast<int>(), P = B;
  int g = 0;
  for (int k = 1; k <= 2 * n; ++k) {
    if (P.diagonal().any()) g = std::gcd(g, k);
    P = ((P * B).array() > 0).cast<int>();
  }
  return g == 0 ? 0 : g;
}

Eigen::MatrixXd pf_limit(const Eigen::MatrixXd& N, double lambda) {
  int n = int(N.rows());
  Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd T = (I + N / lambda) / 2;
  for (int k = 0; k < 200; ++k) {
    Eigen::MatrixXd T2 = T * T;
    double d = (T2 - T).cwiseAbs().maxCoeff();
    T = T2;
    if (d < 1e-15) break;
  }
  return T;
}

PFIdempotent pf_idempotent(const Semigroup& S, double tol) {
  JCell j = jcell_trivial(S);
  if (!j.trivial)
    throw std::invalid_argument("pf_idempotent: not J-cell-trivial (" + S.C.labels[j.F] + " is not a summand of H⊠" +
                                S.C.labels[j.G] + "⊠K)");
  int n = S.n();
  Eigen::MatrixXi Ni = gr_sum(S);
  Eigen::MatrixXd N = Ni.cast<double>();
  PFIdempotent r;
  r.tol = 1e-9;
  r.lambda = spectral_radius(N, tol, &r.iterations);
  r.period = matrix_period(Ni);
  Eigen::MatrixXd P = pf_limit(N, r.lambda);
  // e = lim s^k / λ^k with s the sum of all indecomposables;  s^k = N^{k-1} s
  r.e = P * Eigen::VectorXd::Ones(n) / r.lambda;
  r.E = Eigen::MatrixXd::Zero(n, n);
  for (int f = 0; f < n; ++f) r.E += r.e(f) * gr_action(S, {f}).cast<double>();
  r.idem_err = n ? (r.E * r.E - r.E).cwiseAbs().maxCoeff() : 0;
  r.full_support = (r.e.array() > r.tol).all();
  r.note = r.period == 1 ? "primitive" : "period " + std::to_string(r.period) + ", limit of the lazy matrix (I+N/λ)/2";
  return r;
}

KMReport km_check(const std::vector<Eigen::MatrixXi>& act, const Eigen::VectorXd& e, double tol) {
  KMReport r;
  int m = act.empty() ? 0 : int(act[0].rows());
  r.cone = (e.array() >= -tol).all() && (e.array() > tol).any();
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(m, m);
  for (size_t f = 0; f < act.size(); ++f) E += e(f) * act[f].cast<double>();
  r.idem_err = m ? (E * E - E).cwiseAbs().maxCoeff() : 0;
  r.idempotent = r.idem_err <= tol;
  std::vector<char> in(m, 0);
  for (size_t f = 0; f < act.size(); ++f)
    if (e(f) > tol)
      for (int y = 0; y < m; ++y)
        if (act[f].row(y).any()) in[y] = 1;
  for (int y = 0; y < m; ++y)
    if (in[y]) r.support_cone.push_back(y);
  if (r.support_cone.empty()) {
    r.injective = false;
    return r;
  }
  Eigen::MatrixXd R(m, r.support_cone.size());
  for (size_t c = 0; c < r.support_cone.size(); ++c) R.col(c) = E.col(r.support_cone[c]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(R);
  svd.setThreshold(tol);
  r.injective = svd.rank() == R.cols();
  return r;
}

}  // namespace sgcat
