#include "sgcat/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace sgcat {

Functor eta_l_target(const Semigroup& S, const Obj& F, const Obj& Fd) { return Functor::right(tensor_obj(S, Fd, F)); }
Functor eta_r_target(const Semigroup& S, const Obj& F, const Obj& Fd) { return Functor::left(tensor_obj(S, Fd, F)); }
Functor eps_l_source(const Semigroup& S, const Obj& F, const Obj& Fd) { return Functor::right(tensor_obj(S, F, Fd)); }
Functor eps_r_source(const Semigroup& S, const Obj& F, const Obj& Fd) { return Functor::left(tensor_obj(S, F, Fd)); }

static Transform zero_transform(const Semigroup& S, const Functor& F, const Functor& G) {
  return transform_from(S, F, G, Vec(transform_dim(S, F, G)));
}

Adjunction zero_adjunction(const Semigroup& S, const Obj& F, const Obj& Fd) {
  Functor I = Functor::id();
  return {F,
          Fd,
          zero_transform(S, I, eta_l_target(S, F, Fd)),
          zero_transform(S, I, eta_r_target(S, F, Fd)),
          zero_transform(S, eps_l_source(S, F, Fd), I),
          zero_transform(S, eps_r_source(S, F, Fd), I)};
}

// ---- the axioms as string computations ---------------------------------------

namespace {

struct Eq {
  std::string axiom, where;
  Mor lhs, rhs;
};

Mor T1(const Semigroup& S, const Adjunction& a, int x) {
  Obj X{x};
  Chain c(S, {X, a.Fd});
  c.apply(0, 1, a.eta_l.at(S, X), L(X), N(L(X), N(L(a.Fd), L(a.F))));
  c.apply(0, 4, a.eps_l.at(S, tensor_obj(S, X, a.Fd)), N(N(L(X), L(a.Fd)), N(L(a.F), L(a.Fd))), N(L(X), L(a.Fd)));
  return c.result();
}

Mor T2(const Semigroup& S, const Adjunction& a, int x) {
  Obj X{x};
  Chain c(S, {X, a.F});
  c.apply(0, 2, a.eta_l.at(S, tensor_obj(S, X, a.F)), N(L(X), L(a.F)), N(N(L(X), L(a.F)), N(L(a.Fd), L(a.F))));
  c.apply(0, 3, a.eps_l.at(S, X), N(L(X), N(L(a.F), L(a.Fd))), L(X));
  return c.result();
}

Mor T3(const Semigroup& S, const Adjunction& a, int x) {
  Obj X{x};
  Chain c(S, {a.F, X});
  c.apply(1, 1, a.eta_r.at(S, X), L(X), N(N(L(a.Fd), L(a.F)), L(X)));
  c.apply(0, 4, a.eps_r.at(S, tensor_obj(S, a.F, X)), N(N(L(a.F), L(a.Fd)), N(L(a.F), L(X))), N(L(a.F), L(X)));
  return c.result();
}

Mor T4(const Semigroup& S, const Adjunction& a, int x) {
  Obj X{x};
  Chain c(S, {a.Fd, X});
  c.apply(0, 2, a.eta_r.at(S, tensor_obj(S, a.Fd, X)), N(L(a.Fd), L(X)), N(N(L(a.Fd), L(a.F)), N(L(a.Fd), L(X))));
  c.apply(1, 3, a.eps_r.at(S, X), N(N(L(a.F), L(a.Fd)), L(X)), L(X));
  return c.result();
}

Mor T5(const Semigroup& S, const Adjunction& a) {  // ε^r_F ∘ a^{-1} ∘ η^l_F
  Chain c(S, {a.F});
  c.apply(0, 1, a.eta_l.at(S, a.F), L(a.F), N(L(a.F), N(L(a.Fd), L(a.F))));
  c.apply(0, 3, a.eps_r.at(S, a.F), N(N(L(a.F), L(a.Fd)), L(a.F)), L(a.F));
  return c.result();
}

Mor T6(const Semigroup& S, const Adjunction& a) {  // ε^l_{F◇} ∘ a ∘ η^r_{F◇}
  Chain c(S, {a.Fd});
  c.apply(0, 1, a.eta_r.at(S, a.Fd), L(a.Fd), N(N(L(a.Fd), L(a.F)), L(a.Fd)));
  c.apply(0, 3, a.eps_l.at(S, a.Fd), N(L(a.Fd), N(L(a.F), L(a.Fd))), L(a.Fd));
  return c.result();
}

Mor IVa_left(const Semigroup& S, const Adjunction& a, int h, int k) {
  Chain c(S, {{h}, {k}});
  c.apply(0, 1, a.eta_l.at(S, {h}), L({h}), N(L({h}), N(L(a.Fd), L(a.F))));
  return c.result();
}
Mor IVa_right(const Semigroup& S, const Adjunction& a, int h, int k) {
  Chain c(S, {{h}, {k}});
  c.apply(1, 1, a.eta_r.at(S, {k}), L({k}), N(N(L(a.Fd), L(a.F)), L({k})));
  return c.result();
}
Mor IVb_left(const Semigroup& S, const Adjunction& a, int h, int k) {
  Chain c(S, {{h}, a.F, a.Fd, {k}});
  c.apply(0, 3, a.eps_l.at(S, {h}), N(L({h}), N(L(a.F), L(a.Fd))), L({h}));
  return c.result();
}
Mor IVb_right(const Semigroup& S, const Adjunction& a, int h, int k) {
  Chain c(S, {{h}, a.F, a.Fd, {k}});
  c.apply(1, 3, a.eps_r.at(S, {k}), N(N(L(a.F), L(a.Fd)), L({k})), L({k}));
  return c.result();
}

// equations linear in the unit (for fixed counit) and in the counit (for fixed unit)
std::vector<Eq> triangle_eqs(const Semigroup& S, const Adjunction& a) {
  std::vector<Eq> eqs;
  const Category& C = S.C;
  for (int x = 0; x < S.n(); ++x) {
    const std::string& X = C.labels[x];
    eqs.push_back({"I", "left triangle through -⊠F◇ at " + X, T1(S, a, x), id_mor(C, tensor_obj(S, {x}, a.Fd))});
    eqs.push_back({"I", "left triangle through -⊠F at " + X, T2(S, a, x), id_mor(C, tensor_obj(S, {x}, a.F))});
    eqs.push_back({"II", "right triangle through F⊠- at " + X, T3(S, a, x), id_mor(C, tensor_obj(S, a.F, {x}))});
    eqs.push_back({"II", "right triangle through F◇⊠- at " + X, T4(S, a, x), id_mor(C, tensor_obj(S, a.Fd, {x}))});
  }
  eqs.push_back({"III", "ε^r_F∘a^{-1}∘η^l_F != id at F=" + C.obj_str(a.F), T5(S, a), id_mor(C, a.F)});
  eqs.push_back({"III", "ε^l_F◇∘a∘η^r_F◇ != id at F◇=" + C.obj_str(a.Fd), T6(S, a), id_mor(C, a.Fd)});
  return eqs;
}

Vec eq_vector(const Category& C, const std::vector<Eq>& eqs, bool lhs) {
  Vec v;
  for (const auto& e : eqs) {
    Vec f = flatten(C, lhs ? e.lhs : e.rhs);
    v.insert(v.end(), f.begin(), f.end());
  }
  return v;
}

}  // namespace

AdjReport verify_adjunction(const Semigroup& S, const Adjunction& a) {
  const Category& C = S.C;
  AdjReport r;
  for (const auto& e : triangle_eqs(S, a)) {
    Report& rep = e.axiom == "I" ? r.I : e.axiom == "II" ? r.II : r.III;
    ++rep.checked;
    if (!mor_equal(C, e.lhs, e.rhs)) rep.fail(e.where);
  }
  for (int h = 0; h < S.n(); ++h)
    for (int k = 0; k < S.n(); ++k) {
      std::string w = "(" + C.labels[h] + "," + C.labels[k] + ")";
      r.IV.checked += 2;
      if (!mor_equal(C, IVa_left(S, a, h, k), IVa_right(S, a, h, k))) r.IV.fail("unit square at " + w);
      if (!mor_equal(C, IVb_left(S, a, h, k), IVb_right(S, a, h, k))) r.IV.fail("counit square at " + w);
    }
  auto nat = [&](const Transform& t, Flavor fl, const std::string& name) {
    Report p = check_transform(S, Flavor::Plain, t);
    r.naturality.checked += p.checked;
    for (const auto& f : p.failures) r.naturality.fail(name + ": " + f);
    Report q = check_transform(S, fl, t, false);
    r.equivariance.checked += q.checked;
    for (const auto& f : q.failures) r.equivariance.fail(name + ": " + f);
  };
  nat(a.eta_l, Flavor::LeftModule, "η^l");
  nat(a.eta_r, Flavor::RightModule, "η^r");
  nat(a.eps_l, Flavor::LeftModule, "ε^l");
  nat(a.eps_r, Flavor::RightModule, "ε^r");
  return r;
}

// ---- search --------------------------------------------------------------------

namespace {

// pairs (left, right) in the product of the two module-transformation spaces satisfying `link`
PairSpace pair_space(const Semigroup& S, const std::vector<Transform>& Bl, const std::vector<Transform>& Br,
                     const std::function<Vec(const Transform&, const Transform&)>& link, const Transform& zl,
                     const Transform& zr) {
  int dl = int(Bl.size()), dr = int(Br.size());
  std::vector<Vec> cols;
  for (int i = 0; i < dl; ++i) cols.push_back(link(Bl[i], zr));
  for (int j = 0; j < dr; ++j) cols.push_back(link(zl, Br[j]));
  PairSpace P;
  if (dl + dr == 0) return P;
  Mat K = kernel(S.C.field, Mat::from_columns(int(cols[0].size()), cols));
  for (int c = 0; c < K.cols; ++c) {
    Vec v = K.col(c);
    Vec cl(v.begin(), v.begin() + dl), cr(v.begin() + dl, v.end());
    Transform l = dl ? transform_combine(S, Bl, cl) : zl;
    Transform r = dr ? transform_combine(S, Br, cr) : zr;
    P.basis.push_back({l, r});
  }
  return P;
}

std::pair<Transform, Transform> combine_pair(const Semigroup& S, const PairSpace& P, const Vec& c,
                                             const Transform& zl, const Transform& zr) {
  std::vector<Transform> L, R;
  for (const auto& p : P.basis) {
    L.push_back(p.first);
    R.push_back(p.second);
  }
  if (L.empty()) return {zl, zr};
  return {transform_combine(S, L, c), transform_combine(S, R, c)};
}

}  // namespace

std::vector<Vec> coefficient_candidates(const Field& F, int d, const SearchOptions& opt) {
  std::vector<Vec> out;
  if (d == 0) return {Vec{}};
  for (int i = 0; i < d; ++i) {
    Vec e(d);
    e[i] = 1;
    out.push_back(e);
  }
  if (F.is_prime()) {
    double total = std::pow(double(F.p()), d);
    if (total <= 256) {
      long N = long(total);
      for (long code = 1; code < N; ++code) {
        Vec v(d);
        long c = code;
        for (int i = 0; i < d; ++i) {
          v[i] = c % F.p();
          c /= F.p();
        }
        out.push_back(v);
      }
      return out;
    }
  }
  std::mt19937_64 rng(opt.seed);
  long hi = F.is_prime() ? F.p() - 1 : 3;
  std::uniform_int_distribution<long> dist(F.is_prime() ? 0 : -3, hi);
  for (int t = 0; t < opt.random_tries; ++t) {
    Vec v(d);
    for (auto& x : v) x = F.from_int(dist(rng));
    out.push_back(v);
  }
  return out;
}

PairSpace eta_pair_space(const Semigroup& S, const Obj& F, const Obj& Fd) {
  Functor I = Functor::id(), Gl = eta_l_target(S, F, Fd), Gr = eta_r_target(S, F, Fd);
  auto Bl = nat_module_space(S, Flavor::LeftModule, I, Gl);
  auto Br = nat_module_space(S, Flavor::RightModule, I, Gr);
  Adjunction z = zero_adjunction(S, F, Fd);
  return pair_space(
      S, Bl, Br,
      [&](const Transform& l, const Transform& r) {
        Adjunction a = z;
        a.eta_l = l;
        a.eta_r = r;
        Vec v;
        for (int h = 0; h < S.n(); ++h)
          for (int k = 0; k < S.n(); ++k) {
            Vec d = flatten(S.C, mor_sub(S.C, IVa_left(S, a, h, k), IVa_right(S, a, h, k)));
            v.insert(v.end(), d.begin(), d.end());
          }
        return v;
      },
      z.eta_l, z.eta_r);
}

PairSpace eps_pair_space(const Semigroup& S, const Obj& F, const Obj& Fd) {
  Functor I = Functor::id(), Gl = eps_l_source(S, F, Fd), Gr = eps_r_source(S, F, Fd);
  auto Bl = nat_module_space(S, Flavor::LeftModule, Gl, I);
  auto Br = nat_module_space(S, Flavor::RightModule, Gr, I);
  Adjunction z = zero_adjunction(S, F, Fd);
  return pair_space(
      S, Bl, Br,
      [&](const Transform& l, const Transform& r) {
        Adjunction a = z;
        a.eps_l = l;
        a.eps_r = r;
        Vec v;
        for (int h = 0; h < S.n(); ++h)
          for (int k = 0; k < S.n(); ++k) {
            Vec d = flatten(S.C, mor_sub(S.C, IVb_left(S, a, h, k), IVb_right(S, a, h, k)));
            v.insert(v.end(), d.begin(), d.end());
          }
        return v;
      },
      z.eps_l, z.eps_r);
}

std::optional<Adjunction> find_adjunction(const Semigroup& S, const Obj& F, const Obj& Fd, const SearchOptions& opt) {
  const Field& K = S.C.field;
  PairSpace Pe = eta_pair_space(S, F, Fd), Pc = eps_pair_space(S, F, Fd);
  Adjunction z = zero_adjunction(S, F, Fd);
  int de = int(Pe.basis.size()), dc = int(Pc.basis.size());

  // fix one side, solve the triangle and zigzag equations for the other
  auto solve_other = [&](Adjunction a, bool fixed_unit) -> std::optional<Adjunction> {
    const PairSpace& P = fixed_unit ? Pc : Pe;
    std::vector<Vec> cols;
    Vec rhs;
    for (const auto& p : P.basis) {
      Adjunction b = a;
      if (fixed_unit) {
        b.eps_l = p.first;
        b.eps_r = p.second;
      } else {
        b.eta_l = p.first;
        b.eta_r = p.second;
      }
      auto eqs = triangle_eqs(S, b);
      cols.push_back(eq_vector(S.C, eqs, true));
      if (rhs.empty()) rhs = eq_vector(S.C, eqs, false);
    }
    if (P.basis.empty()) {
      // the forced data is the zero family
      if (fixed_unit) {
        a.eps_l = z.eps_l;
        a.eps_r = z.eps_r;
      } else {
        a.eta_l = z.eta_l;
        a.eta_r = z.eta_r;
      }
      return a;
    }
    Solution s = solve(K, Mat::from_columns(int(rhs.size()), cols), rhs);
    if (!s.consistent) return std::nullopt;
    auto pr = combine_pair(S, P, s.particular, fixed_unit ? z.eps_l : z.eta_l, fixed_unit ? z.eps_r : z.eta_r);
    if (fixed_unit) {
      a.eps_l = pr.first;
      a.eps_r = pr.second;
    } else {
      a.eta_l = pr.first;
      a.eta_r = pr.second;
    }
    return a;
  };

  for (int round = 0; round < 2; ++round) {
    bool fixed_unit = round == 0;
    int d = fixed_unit ? de : dc;
    const PairSpace& P = fixed_unit ? Pe : Pc;
    for (const Vec& c : coefficient_candidates(K, d, opt)) {
      Adjunction a = z;
      auto pr = combine_pair(S, P, c, fixed_unit ? z.eta_l : z.eps_l, fixed_unit ? z.eta_r : z.eps_r);
      if (fixed_unit) {
        a.eta_l = pr.first;
        a.eta_r = pr.second;
      } else {
        a.eps_l = pr.first;
        a.eps_r = pr.second;
      }
      auto full = solve_other(a, fixed_unit);
      if (full && verify_adjunction(S, *full).pass()) return full;
    }
  }
  return std::nullopt;
}

int max_tensor_mult(const Semigroup& S) {
  int m = 1;
  for (const auto& o : S.tens) {
    std::map<int, int> cnt;
    for (int v : o) m = std::max(m, ++cnt[v]);
  }
  return m;
}

static std::vector<int> counts(int n, const Obj& A) {
  std::vector<int> c(n, 0);
  for (int v : A) ++c[v];
  return c;
}

static bool dominated(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<Obj> dual_candidates(const Semigroup& S, const Obj& F, bool right, int max_mult) {
  int n = S.n();
  int K = max_mult > 0 ? max_mult : max_tensor_mult(S);
  std::vector<Obj> out;
  std::vector<int> mult(n, 0);
  while (true) {
    int i = 0;
    while (i < n && mult[i] == K) mult[i++] = 0;
    if (i == n) break;
    ++mult[i];
    Obj G;
    for (int x = 0; x < n; ++x) G.insert(G.end(), mult[x], x);
    const Obj& A = right ? F : G;   // left adjoint
    const Obj& B = right ? G : F;   // its dual
    if (!dominated(counts(n, A), counts(n, tensor_obj(S, tensor_obj(S, A, B), A)))) continue;
    if (!dominated(counts(n, B), counts(n, tensor_obj(S, tensor_obj(S, B, A), B)))) continue;
    out.push_back(G);
  }
  std::stable_sort(out.begin(), out.end(), [](const Obj& a, const Obj& b) { return a.size() < b.size(); });
  return out;
}

std::optional<Adjunction> find_dual(const Semigroup& S, int x, const SearchOptions& opt) {
  for (const Obj& G : dual_candidates(S, {x}, true, opt.max_mult))
    if (auto a = find_adjunction(S, {x}, G, opt)) return a;
  return std::nullopt;
}

std::optional<Adjunction> find_left_dual(const Semigroup& S, int x, const SearchOptions& opt) {
  for (const Obj& G : dual_candidates(S, {x}, false, opt.max_mult))
    if (auto a = find_adjunction(S, G, {x}, opt)) return a;
  return std::nullopt;
}

std::optional<Certificate> find_certificate(const Semigroup& S, const SearchOptions& opt, std::string* missing) {
  Certificate c;
  for (int x = 0; x < S.n(); ++x) {
    auto r = find_dual(S, x, opt);
    if (!r) {
      if (missing) *missing = "no right dual found for " + S.C.labels[x];
      return std::nullopt;
    }
    auto l = find_left_dual(S, x, opt);
    if (!l) {
      if (missing) *missing = "no left dual found for " + S.C.labels[x];
      return std::nullopt;
    }
    c.right.push_back(*r);
    c.left.push_back(*l);
  }
  return c;
}

// ---- composition ------------------------------------------------------------------

Adjunction compose_adjunctions(const Semigroup& S, const Adjunction& aF, const Adjunction& aG) {
  const Obj &F = aF.F, &Fd = aF.Fd, &G = aG.F, &Gd = aG.Fd;
  Obj F2 = tensor_obj(S, G, F), Fd2 = tensor_obj(S, Fd, Gd);
  Adjunction r = zero_adjunction(S, F2, Fd2);
  for (int x = 0; x < S.n(); ++x) {
    Obj X{x};
    {
      Chain c(S, {X});
      c.apply(0, 1, aF.eta_l.at(S, X), L(X), N(L(X), N(L(Fd), L(F))));
      c.apply(0, 2, aG.eta_l.at(S, tensor_obj(S, X, Fd)), N(L(X), L(Fd)), N(N(L(X), L(Fd)), N(L(Gd), L(G))));
      r.eta_l.comp[x] = compose(S.C, from_lnorm(S, N(L(X), N(N(L(Fd), L(Gd)), N(L(G), L(F))))), c.result());
    }
    {
      Chain c(S, N(L(X), N(N(L(G), L(F)), N(L(Fd), L(Gd)))));
      c.apply(0, 4, aF.eps_l.at(S, tensor_obj(S, X, G)), N(N(L(X), L(G)), N(L(F), L(Fd))), N(L(X), L(G)));
      c.apply(0, 3, aG.eps_l.at(S, X), N(L(X), N(L(G), L(Gd))), L(X));
      r.eps_l.comp[x] = c.result();
    }
    {
      Chain c(S, {X});
      c.apply(0, 1, aF.eta_r.at(S, X), L(X), N(N(L(Fd), L(F)), L(X)));
      c.apply(1, 2, aG.eta_r.at(S, tensor_obj(S, F, X)), N(L(F), L(X)), N(N(L(Gd), L(G)), N(L(F), L(X))));
      r.eta_r.comp[x] = compose(S.C, from_lnorm(S, N(N(N(L(Fd), L(Gd)), N(L(G), L(F))), L(X))), c.result());
    }
    {
      Chain c(S, N(N(N(L(G), L(F)), N(L(Fd), L(Gd))), L(X)));
      c.apply(1, 4, aF.eps_r.at(S, tensor_obj(S, Gd, X)), N(N(L(F), L(Fd)), N(L(Gd), L(X))), N(L(Gd), L(X)));
      c.apply(0, 3, aG.eps_r.at(S, X), N(N(L(G), L(Gd)), L(X)), L(X));
      r.eps_r.comp[x] = c.result();
    }
  }
  return r;
}

// ---- duality ----------------------------------------------------------------------

Obj dual_obj(const Certificate& cert, const Obj& A) {
  Obj r;
  for (int a : A) r = concat(r, cert.right.at(a).Fd);
  return r;
}

Obj predual_obj(const Certificate& cert, const Obj& A) {
  Obj r;
  for (int a : A) r = concat(r, cert.left.at(a).F);
  return r;
}

static std::vector<int> block_positions(const std::vector<Obj>& parts, size_t i) {
  int start = 0;
  for (size_t k = 0; k < i; ++k) start += int(parts[k].size());
  std::vector<int> r;
  for (int k = 0; k < int(parts[i].size()); ++k) r.push_back(start + k);
  return r;
}

Mor dual_mor(const Semigroup& S, const Certificate& cert, const Mor& f) {
  std::vector<Obj> As, Bs;
  for (int a : f.src) As.push_back(cert.right.at(a).Fd);
  for (int b : f.dst) Bs.push_back(cert.right.at(b).Fd);
  Mor r(dual_obj(cert, f.dst), dual_obj(cert, f.src));
  for (size_t row = 0; row < f.dst.size(); ++row)
    for (size_t col = 0; col < f.src.size(); ++col) {
      const Vec& b = f.at(row, col);
      if (b.empty()) continue;
      const Adjunction &aF = cert.right[f.src[col]], &aG = cert.right[f.dst[row]];
      Mor g(Obj{f.src[col]}, Obj{f.dst[row]});
      g.at(0, 0) = b;
      Chain c(S, {aG.Fd});
      c.apply(0, 1, aF.eta_r.at(S, aG.Fd), L(aG.Fd), N(N(L(aF.Fd), L(aF.F)), L(aG.Fd)));
      c.apply(1, 1, g, L(aF.F), L(aG.F));
      c.apply(0, 3, aG.eps_l.at(S, aF.Fd), N(L(aF.Fd), N(L(aG.F), L(aG.Fd))), L(aF.Fd));
      place(r, c.result(), block_positions(As, col), block_positions(Bs, row));
    }
  return r;
}

Mor predual_mor(const Semigroup& S, const Certificate& cert, const Mor& f) {
  std::vector<Obj> As, Bs;
  for (int a : f.src) As.push_back(cert.left.at(a).F);
  for (int b : f.dst) Bs.push_back(cert.left.at(b).F);
  Mor r(predual_obj(cert, f.dst), predual_obj(cert, f.src));
  for (size_t row = 0; row < f.dst.size(); ++row)
    for (size_t col = 0; col < f.src.size(); ++col) {
      const Vec& b = f.at(row, col);
      if (b.empty()) continue;
      const Adjunction &aF = cert.left[f.src[col]], &aG = cert.left[f.dst[row]];  // (◇F, F), (◇G, G)
      Mor g(Obj{f.src[col]}, Obj{f.dst[row]});
      g.at(0, 0) = b;
      Chain c(S, {aG.F});
      c.apply(0, 1, aF.eta_l.at(S, aG.F), L(aG.F), N(L(aG.F), N(L(aF.Fd), L(aF.F))));
      c.apply(1, 1, g, L(aF.Fd), L(aG.Fd));
      c.apply(0, 3, aG.eps_r.at(S, aF.F), N(N(L(aG.F), L(aG.Fd)), L(aF.F)), L(aF.F));
      place(r, c.result(), block_positions(As, col), block_positions(Bs, row));
    }
  return r;
}

Mor dual_comparison(const Semigroup& S, const Adjunction& a1, const Adjunction& a2) {
  if (a1.F != a2.F) throw std::invalid_argument("dual_comparison: different left adjoints");
  Chain c(S, {a1.Fd});
  c.apply(0, 1, a2.eta_r.at(S, a1.Fd), L(a1.Fd), N(N(L(a2.Fd), L(a1.F)), L(a1.Fd)));
  c.apply(0, 3, a1.eps_l.at(S, a2.Fd), N(L(a2.Fd), N(L(a1.F), L(a1.Fd))), L(a2.Fd));
  return c.result();
}

Mat hom_iso_left(const Semigroup& S, const Adjunction& a, int h, int k) {
  Obj H{h}, K{k};
  Obj src = tensor_obj(S, a.F, H);
  int d = mor_dim(S.C, src, K);
  return linear_map_matrix(d, [&](const Vec& v) {
    Mor g = v.empty() ? Mor(src, K) : unflatten(S.C, src, K, v);
    Chain c(S, {H});
    c.apply(0, 1, a.eta_r.at(S, H), L(H), N(N(L(a.Fd), L(a.F)), L(H)));
    c.apply(1, 2, g, N(L(a.F), L(H)), L(K));
    return flatten(S.C, c.result());
  });
}

Mat hom_iso_right(const Semigroup& S, const Adjunction& a, int h, int k) {
  Obj H{h}, K{k};
  Obj dst = tensor_obj(S, K, a.F);
  int d = mor_dim(S.C, H, dst);
  return linear_map_matrix(d, [&](const Vec& v) {
    Mor g = v.empty() ? Mor(H, dst) : unflatten(S.C, H, dst, v);
    Chain c(S, {H, a.Fd});
    c.apply(0, 1, g, L(H), N(L(K), L(a.F)));
    c.apply(0, 3, a.eps_l.at(S, K), N(L(K), N(L(a.F), L(a.Fd))), L(K));
    return flatten(S.C, c.result());
  });
}

}  // namespace sgcat
