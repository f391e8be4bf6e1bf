#include "sgcat/modlift.hpp"

#include <stdexcept>

#include "sgcat/generators.hpp"

namespace sgcat {

std::string real_status_str(RealStatus s) {
  switch (s) {
    case RealStatus::Found: return "found";
    case RealStatus::Refuted: return "refuted";
    case RealStatus::Undecided: return "undecided";
  }
  return "?";
}

namespace {

Transform zero_at_S(const ModuleCat& Mo, Transform t) {
  for (int s = 0; s < Mo.nS; ++s) t.comp[s] = zero_mor(t.comp[s].src, t.comp[s].dst);
  return t;
}

// M-parts of the natural families F => G on T
std::vector<Transform> module_part(const ModuleCat& Mo, const Functor& F, const Functor& G) {
  const Semigroup& T = Mo.T;
  RowSpace rs(T.C.field, transform_dim(T, F, G));
  std::vector<Transform> out;
  for (auto& t : nat_module_space(T, Flavor::Plain, F, G)) {
    Transform z = zero_at_S(Mo, t);
    if (rs.add(transform_flat(T, z))) out.push_back(std::move(z));
  }
  return out;
}

Transform combine_or_zero(const Semigroup& T, const std::vector<Transform>& basis, const Vec& c, const Functor& F,
                          const Functor& G) {
  if (basis.empty()) return transform_from(T, F, G, Vec(transform_dim(T, F, G)));
  return transform_combine(T, basis, c);
}

// (εF)∘(Fη) on F⋆X and (F◇ε)∘(ηF◇) on F◇⋆X
Mor tri1(const ModuleCat& Mo, const Adjunction& adj, const Transform& eta, const Transform& eps, int x) {
  const Semigroup& T = Mo.T;
  const Obj &F = adj.F, &Fd = adj.Fd;
  Obj X{Mo.idx(x)};
  Chain c(T, {F, X});
  c.apply(1, 1, eta.at(T, X), L(X), N(N(L(Fd), L(F)), L(X)));
  c.apply(0, 4, eps.at(T, tensor_obj(T, F, X)), N(N(L(F), L(Fd)), N(L(F), L(X))), N(L(F), L(X)));
  return c.result();
}

Mor tri2(const ModuleCat& Mo, const Adjunction& adj, const Transform& eta, const Transform& eps, int x) {
  const Semigroup& T = Mo.T;
  const Obj &F = adj.F, &Fd = adj.Fd;
  Obj X{Mo.idx(x)};
  Chain c(T, {Fd, X});
  c.apply(0, 2, eta.at(T, tensor_obj(T, Fd, X)), N(L(Fd), L(X)), N(N(L(Fd), L(F)), N(L(Fd), L(X))));
  c.apply(1, 3, eps.at(T, X), N(N(L(F), L(Fd)), L(X)), L(X));
  return c.result();
}

// stacked residual-free values of both triangles over all X
Vec tri_values(const ModuleCat& Mo, const Adjunction& adj, const Transform& eta, const Transform& eps) {
  const Category& C = Mo.T.C;
  Vec out;
  for (int x = 0; x < Mo.m(); ++x) {
    Vec a = flatten(C, tri1(Mo, adj, eta, eps, x)), b = flatten(C, tri2(Mo, adj, eta, eps, x));
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

Vec tri_target(const ModuleCat& Mo, const Adjunction& adj) {
  const Semigroup& T = Mo.T;
  Vec out;
  for (int x = 0; x < Mo.m(); ++x) {
    Obj X{Mo.idx(x)};
    Vec a = flatten(T.C, id_mor(T.C, tensor_obj(T, adj.F, X))), b = flatten(T.C, id_mor(T.C, tensor_obj(T, adj.Fd, X)));
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

// solve for one family with the other fixed; the triangle values are linear in each
template <class Eval>
std::optional<Vec> solve_side(const Field& K, const std::vector<Transform>& basis, const Vec& target, Eval eval) {
  if (basis.empty()) return std::nullopt;
  std::vector<Vec> cols;
  for (const auto& b : basis) cols.push_back(eval(b));
  Solution s = solve(K, Mat::from_columns(int(target.size()), cols), target);
  if (!s.consistent) return std::nullopt;
  return s.particular;
}

Transform synth_eta(const ModuleCat& Mo, const Adjunction& adj, const Transform& eh, const Transform& ech) {
  const Semigroup& T = Mo.T;
  const Obj &F = adj.F, &Fd = adj.Fd;
  Obj D = tensor_obj(T, Fd, F);
  Transform r{Functor::id(), Functor::left(D), {}};
  for (int s = 0; s < Mo.nS; ++s) r.comp.push_back(zero_mor({s}, tensor_obj(T, D, {s})));
  for (int x = 0; x < Mo.m(); ++x) {
    Obj X{Mo.idx(x)};
    Chain c(T, {X});
    c.apply(0, 1, eh.at(T, X), L(X), N(N(L(Fd), L(F)), L(X)));
    c.apply(2, 1, eh.at(T, X), L(X), N(N(L(Fd), L(F)), L(X)));
    c.apply(1, 1, adj.eta_l.at(T, F), L(F), N(L(F), N(L(Fd), L(F))));
    c.apply(3, 4, ech.at(T, tensor_obj(T, F, X)), N(N(L(F), L(Fd)), N(L(F), L(X))), N(L(F), L(X)));
    c.apply(1, 4, ech.at(T, tensor_obj(T, F, X)), N(N(L(F), L(Fd)), N(L(F), L(X))), N(L(F), L(X)));
    r.comp.push_back(c.result());
  }
  return r;
}

Transform synth_eps(const ModuleCat& Mo, const Adjunction& adj, const Transform& eh, const Transform& ech) {
  const Semigroup& T = Mo.T;
  const Obj &F = adj.F, &Fd = adj.Fd;
  Obj E = tensor_obj(T, F, Fd);
  Transform r{Functor::left(E), Functor::id(), {}};
  for (int s = 0; s < Mo.nS; ++s) r.comp.push_back(zero_mor(tensor_obj(T, E, {s}), {s}));
  for (int x = 0; x < Mo.m(); ++x) {
    Obj X{Mo.idx(x)};
    Chain c(T, N(N(L(F), L(Fd)), L(X)));
    Obj FdX = tensor_obj(T, Fd, X);
    TreeP in = N(L(Fd), L(X)), out = N(N(L(Fd), L(F)), N(L(Fd), L(X)));
    c.apply(1, 2, eh.at(T, FdX), in, out);
    c.apply(3, 2, eh.at(T, FdX), in, out);
    c.apply(1, 3, adj.eps_l.at(T, Fd), N(L(Fd), N(L(F), L(Fd))), L(Fd));
    c.apply(2, 3, ech.at(T, X), N(N(L(F), L(Fd)), L(X)), L(X));
    c.apply(0, 3, ech.at(T, X), N(N(L(F), L(Fd)), L(X)), L(X));
    r.comp.push_back(c.result());
  }
  return r;
}

}  // namespace

Report module_triangles(const ModuleCat& Mo, const Adjunction& adj, const Transform& eta, const Transform& eps) {
  const Semigroup& T = Mo.T;
  Report r;
  for (int x = 0; x < Mo.m(); ++x) {
    Obj X{Mo.idx(x)};
    const std::string lx = T.C.labels[X[0]];
    r.checked += 2;
    if (!mor_equal(T.C, tri1(Mo, adj, eta, eps, x), id_mor(T.C, tensor_obj(T, adj.F, X))))
      r.fail("(εF)(Fη) != id at " + lx);
    if (!mor_equal(T.C, tri2(Mo, adj, eta, eps, x), id_mor(T.C, tensor_obj(T, adj.Fd, X))))
      r.fail("(F◇ε)(ηF◇) != id at " + lx);
  }
  return r;
}

Report coherence_check(const ModuleCat& Mo, const Adjunction& adj, const Transform& eta, const Transform& eps) {
  const Semigroup& T = Mo.T;
  const Obj &F = adj.F, &Fd = adj.Fd;
  Report r;
  for (int h = 0; h < Mo.nS; ++h)
    for (int x = 0; x < Mo.m(); ++x) {
      Obj H{h}, X{Mo.idx(x)};
      std::string w = "(" + T.C.labels[h] + "," + T.C.labels[X[0]] + ")";
      Chain a(T, {H, F, Fd, X}), b(T, {H, F, Fd, X});
      a.apply(1, 3, eps.at(T, X), N(N(L(F), L(Fd)), L(X)), L(X));
      b.apply(0, 3, adj.eps_l.at(T, H), N(L(H), N(L(F), L(Fd))), L(H));
      ++r.checked;
      if (!mor_equal(T.C, a.result(), b.result())) r.fail("M H ε_X != M(ε^l_H)_X at " + w);
      Chain c(T, {H, X}), d(T, {H, X});
      c.apply(1, 1, eta.at(T, X), L(X), N(N(L(Fd), L(F)), L(X)));
      d.apply(0, 1, adj.eta_l.at(T, H), L(H), N(L(H), N(L(Fd), L(F))));
      ++r.checked;
      if (!mor_equal(T.C, c.result(), d.result())) r.fail("M H η_X != M(η^l_H)_X at " + w);
    }
  return r;
}

Realization adjunction_realization(const ModuleCat& Mo, const Adjunction& adj, const SearchOptions& opt) {
  const Semigroup& T = Mo.T;
  const Category& C = T.C;
  const Field& K = C.field;
  const Obj &F = adj.F, &Fd = adj.Fd;
  Realization R;
  // Hom(F⋆X, Y) ≅ Hom(X, F◇⋆Y) forces equal dimensions
  for (int x = 0; x < Mo.m(); ++x)
    for (int y = 0; y < Mo.m(); ++y) {
      Obj X{Mo.idx(x)}, Y{Mo.idx(y)};
      int a = mor_dim(C, tensor_obj(T, F, X), Y), b = mor_dim(C, X, tensor_obj(T, Fd, Y));
      if (a != b) {
        R.status = RealStatus::Refuted;
        R.reason = "dim Hom(F⋆" + C.labels[X[0]] + ", " + C.labels[Y[0]] + ") = " + std::to_string(a) + " but dim Hom(" +
                   C.labels[X[0]] + ", F◇⋆" + C.labels[Y[0]] + ") = " + std::to_string(b);
        return R;
      }
    }
  Functor Fid = Functor::id(), FD = Functor::left(tensor_obj(T, Fd, F)), FE = Functor::left(tensor_obj(T, F, Fd));
  auto etas = module_part(Mo, Fid, FD), epss = module_part(Mo, FE, Fid);
  Vec target = tri_target(Mo, adj);
  bool found = false;
  if (target.empty() || is_zero(target)) {
    // nothing to invert: M F = 0 and M F◇ = 0
    R.eta_hat = combine_or_zero(T, {}, {}, Fid, FD);
    R.eps_hat = combine_or_zero(T, {}, {}, FE, Fid);
    found = true;
  }
  for (int round = 0; round < 2 && !found; ++round) {
    const auto& fixed = round == 0 ? etas : epss;
    const auto& other = round == 0 ? epss : etas;
    if (fixed.empty()) continue;
    for (const Vec& cand : coefficient_candidates(K, int(fixed.size()), opt)) {
      Transform f = transform_combine(T, fixed, cand);
      auto sol = solve_side(K, other, target, [&](const Transform& o) {
        return round == 0 ? tri_values(Mo, adj, f, o) : tri_values(Mo, adj, o, f);
      });
      if (!sol) continue;
      Transform o = transform_combine(T, other, *sol);
      R.eta_hat = round == 0 ? f : o;
      R.eps_hat = round == 0 ? o : f;
      found = true;
      break;
    }
  }
  if (!found) {
    R.status = RealStatus::Undecided;
    R.reason = "no unit/counit pair found (unit space dim " + std::to_string(etas.size()) + ", counit space dim " +
               std::to_string(epss.size()) + ", seed " + std::to_string(opt.seed) + ")";
    return R;
  }
  R.status = RealStatus::Found;
  R.hat_triangles = module_triangles(Mo, adj, R.eta_hat, R.eps_hat);
  R.eta = synth_eta(Mo, adj, R.eta_hat, R.eps_hat);
  R.eps = synth_eps(Mo, adj, R.eta_hat, R.eps_hat);
  R.triangles = module_triangles(Mo, adj, R.eta, R.eps);
  R.coherence = coherence_check(Mo, adj, R.eta, R.eps);
  R.naturality = check_transform(T, Flavor::Plain, R.eta);
  Report n2 = check_transform(T, Flavor::Plain, R.eps);
  R.naturality.checked += n2.checked;
  for (auto& f : n2.failures) R.naturality.fail(f);
  return R;
}

// ---- presheaves on M inside S ⊔ M -----------------------------------------------------------

Presheaf extend_presheaf(const Category& big, const Presheaf& P, int offset) {
  int n = big.n(), k = int(P.dim.size());
  Presheaf R;
  R.dim.assign(n, 0);
  for (int x = 0; x < k; ++x) R.dim[offset + x] = P.dim[x];
  R.act.resize(size_t(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool in = x >= offset && x < offset + k && y >= offset && y < offset + k;
      for (int i = 0; i < big.homdim(x, y); ++i)
        R.act[size_t(x) * n + y].push_back(in ? P.at(k, x - offset, y - offset, i) : Mat(R.dim[y], R.dim[x]));
    }
  return R;
}

Presheaf restrict_presheaf(const Category& small, const Presheaf& P, int offset) {
  int k = small.n(), n = int(P.dim.size());
  Presheaf R;
  for (int x = 0; x < k; ++x) R.dim.push_back(P.dim[offset + x]);
  R.act.resize(size_t(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) R.act[size_t(x) * k + y] = P.act[size_t(offset + x) * n + offset + y];
  return R;
}

// ---- unital lift ----------------------------------------------------------------------------------

namespace {

// θ : 𝟙⋆Y(X) -> Y(X) on M, from the coherent counits
void lift_unitor(const Semigroup& S, const ModuleCat& Mo, const Certificate& cert, const Quotient& U,
                 const Presheaf& Uext, const std::vector<Realization>& real, int x, Report& rep) {
  const Semigroup& T = Mo.T;
  const Category& C = T.C;
  const Field& K = C.field;
  int n = C.n(), nS = Mo.nS;
  Category Mb = Mo.base();
  Obj X{Mo.idx(x)};
  std::string tag = "𝟙⋆Y(" + Mb.labels[x] + ")";
  // ⊕_H H⊠H◇, the generating object of 𝟙
  std::vector<Obj> dsts;
  Obj dst;
  for (int h = 0; h < nS; ++h) {
    dsts.push_back(tensor_obj(S, cert.right[h].F, cert.right[h].Fd));
    dst = concat(dst, dsts.back());
  }
  Obj dX = tensor_obj(T, dst, X);
  Mor etot(dX, X);
  int off = 0;
  for (int h = 0; h < nS; ++h) {
    Mor e = real[h].eps.at(T, X);
    std::vector<int> cols;
    for (size_t i = 0; i < e.src.size(); ++i) cols.push_back(off + int(i));
    place(etot, e, {0}, cols);
    off += int(e.src.size());
  }
  // independence of the representative in Y(⊕ H⊠H◇)
  for (int a = 0; a < nS; ++a) {
    Mat ker = kernel(K, U.proj[a]);
    for (int j = 0; j < ker.cols; ++j) {
      ++rep.checked;
      Mor r = element_mor(S.C, dst, a, ker.col(j));
      if (!mor_is_zero(compose(C, etot, tensor_mor(T, r, id_mor(C, X))))) {
        rep.fail(tag + ": counit sum does not vanish on the relations of 𝟙 at " + S.C.labels[a]);
        return;
      }
    }
  }
  Presheaf YX = representable(C, X);
  DayResult D = day_convolve(T, Uext, YX);
  std::vector<Mat> bar;
  for (int z = nS; z < n; ++z) {
    Mat theta(YX.dim[z], D.gdim[z]);
    for (int a = 0; a < nS; ++a)
      for (int k = nS; k < n; ++k) {
        int nphi = mor_dim(C, {z}, T.t(a, k));
        int dP = Uext.dim[a], dQ = YX.dim[k];
        if (nphi == 0 || dP == 0 || dQ == 0) continue;
        for (int u = 0; u < dP; ++u) {
          Mor su = element_mor(S.C, dst, a, U.sect[a].col(u));
          Mor left = compose(C, etot, tensor_mor(T, su, id_mor(C, X)));
          for (int e = 0; e < dQ; ++e) {
            Vec ev(dQ);
            ev[e] = 1;
            Mor m = compose(C, left, tensor_mor(T, id_mor(C, {a}), element_mor(C, X, k, ev)));
            for (int phi = 0; phi < nphi; ++phi) {
              Vec pv(nphi);
              pv[phi] = 1;
              Vec img = flatten(C, compose(C, m, element_mor(C, T.t(a, k), z, pv)));
              theta.set_col(D.goff[z][size_t(a) * n + k] + (phi * dP + u) * dQ + e, img);
            }
          }
        }
      }
    ++rep.checked;
    Mat relfree = mat_sub(K, Mat::identity(D.gdim[z]), mat_mul(K, D.sect[z], D.proj[z]));
    if (!mat_is_zero(mat_mul(K, theta, relfree))) rep.fail(tag + ": θ does not vanish on relations at " + C.labels[z]);
    bar.push_back(mat_mul(K, theta, D.sect[z]));
  }
  PMap th{bar};
  Presheaf Dm = restrict_presheaf(Mb, D.R, nS), Ym = representable(Mb, {x});
  Report nat = check_pmap(Mb, Dm, Ym, th);
  rep.checked += nat.checked;
  for (auto& f : nat.failures) rep.fail(tag + ": θ " + f);
  PMap sigma;
  for (int z = 0; z < Mo.m(); ++z) {
    ++rep.checked;
    auto inv = inverse(K, bar[z]);
    if (!inv) {
      rep.fail(tag + ": θ not invertible at " + Mb.labels[z]);
      return;
    }
    sigma.comp.push_back(*inv);
  }
  rep.checked += 2;
  if (!pmap_equal(pmap_compose(Mb, th, sigma), pmap_identity(Ym))) rep.fail(tag + ": θσ != id");
  if (!pmap_equal(pmap_compose(Mb, sigma, th), pmap_identity(Dm))) rep.fail(tag + ": σθ != id");
}

}  // namespace

LiftReport unital_lift_check(const Semigroup& S, const ModuleCat& Mo, const Certificate& cert,
                             const SearchOptions& opt) {
  LiftReport L;
  const Semigroup& T = Mo.T;
  const Category& C = T.C;
  for (int f = 0; f < S.n(); ++f) L.realizations.push_back(adjunction_realization(Mo, cert.right[f], opt));
  int missing = -1;
  if (!covers_module(Mo, &missing)) {
    L.precondition = "S⋆M != M: " + C.labels[Mo.idx(missing)] + " is not a summand of any F⋆X";
    return L;
  }
  for (int f = 0; f < S.n(); ++f) {
    const Realization& r = L.realizations[f];
    if (!r.pass()) {
      L.precondition = "adjunction for " + S.C.labels[f] + " not realized on M (" + real_status_str(r.status) +
                       (r.reason.empty() ? "" : ": " + r.reason) + ")";
      return L;
    }
  }
  L.note = "adjunctions checked: those of the rigidity certificate";
  Quotient U = unit_general(S, &cert);
  Presheaf Uext = extend_presheaf(C, U.P, 0);
  for (int x = 0; x < Mo.m(); ++x) lift_unitor(S, Mo, cert, U, Uext, L.realizations, x, L.theta);
  Category Mb = Mo.base();
  for (int x = 0; x < Mo.m(); ++x) {
    Presheaf Yx = representable(Mb, {x});
    CoverFlags cf = cover_and_flags(Mb, Yx);
    ++L.roundtrip.checked;
    if (!cf.projective || !same_multiset(cf.cover, {x})) L.roundtrip.fail("Y(" + Mb.labels[x] + ") is not its own cover");
    Presheaf Yt = representable(C, {Mo.idx(x)});
    for (int f = 0; f < S.n(); ++f) {
      Presheaf Yf = extend_presheaf(C, representable(S.C, {f}), 0);
      Presheaf conv = restrict_presheaf(Mb, day_convolve(T, Yf, Yt).R, Mo.nS);
      ++L.roundtrip.checked;
      IsoResult ir = presheaf_iso(Mb, conv, representable(Mb, Mo.act(f, x)), opt.seed);
      if (ir.status != IsoStatus::Iso)
        L.roundtrip.fail("Y(" + S.C.labels[f] + ")⋆Y(" + Mb.labels[x] + ") vs Y(F⋆X): " + iso_status_str(ir.status));
    }
  }
  L.pass = L.theta.pass && L.roundtrip.pass;
  return L;
}

ProjReport projectivizing_check(const Semigroup& S, const ModuleCat& Mo) {
  ProjReport R;
  const Semigroup& T = Mo.T;
  Category Mb = Mo.base();
  std::vector<std::pair<std::string, Presheaf>> probes;
  for (int x = 0; x < Mo.m(); ++x) {
    Presheaf Y = representable(Mb, {x});
    probes.push_back({"Y(" + Mb.labels[x] + ")", Y});
    probes.push_back({"simple top of Y(" + Mb.labels[x] + ")", quotient(Mb, Y, radical_submodule(Mb, Y)).P});
  }
  for (int f = 0; f < S.n(); ++f) {
    Presheaf Yf = extend_presheaf(T.C, representable(S.C, {f}), 0);
    for (auto& [name, P] : probes) {
      Presheaf FX = restrict_presheaf(Mb, day_convolve(T, Yf, extend_presheaf(T.C, P, Mo.nS)).R, Mo.nS);
      ++R.checked;
      if (!cover_and_flags(Mb, FX).projective) {
        R.projectivizing = false;
        R.witness = S.C.labels[f] + "⋆(" + name + ") is not projective";
        return R;
      }
    }
  }
  return R;
}

ModuleCat semisimplification_module(const Field& K) {
  Semigroup S = gen_linear_semigroup(K, {"*"}, {{0}});
  Category M;
  M.field = K;
  M.labels = {"A", "k"};
  // Hom(A,A) = {1, x}, Hom(A,k) = {π}, Hom(k,A) = {ι}, Hom(k,k) = {1}
  M.hd = {2, 1, 1, 1};
  M.allocate();
  auto set = [&](int x, int y, int z, int i, int j, Vec v) { M.cmp[(size_t(x) * 2 + y) * 2 + z][size_t(j) * M.homdim(x, y) + i] = v; };
  const int A = 0, k = 1;
  set(A, A, A, 0, 0, {1, 0});
  set(A, A, A, 0, 1, {0, 1});
  set(A, A, A, 1, 0, {0, 1});
  set(A, A, A, 1, 1, {0, 0});
  set(A, A, k, 0, 0, {1});  // π∘1
  set(A, A, k, 1, 0, {0});  // π∘x
  set(A, k, A, 0, 0, {0, 1});  // ι∘π = x
  set(A, k, k, 0, 0, {1});
  set(k, A, A, 0, 0, {1});  // 1∘ι
  set(k, A, A, 0, 1, {0});  // x∘ι
  set(k, A, k, 0, 0, {0});  // π∘ι
  set(k, k, A, 0, 0, {1});
  set(k, k, k, 0, 0, {1});
  M.ident = {{1, 0}, {1}};
  std::vector<Obj> act = {{k, k}, {k}};
  auto mk = [](Obj s, Obj d, std::vector<std::pair<int, int>> ones) {
    Mor m(s, d);
    for (auto [r, c] : ones) m.at(r, c) = Vec{1};
    return m;
  };
  std::vector<std::vector<Mor>> amt(4);
  amt[0] = {mk({k, k}, {k, k}, {{0, 0}, {1, 1}}), mk({k, k}, {k, k}, {{1, 0}})};  // 1 ↦ id, x ↦ top -> socle
  amt[1] = {mk({k, k}, {k}, {{0, 0}})};                                          // π ↦ first component
  amt[2] = {mk({k}, {k, k}, {{1, 0}})};                                          // ι ↦ second component
  amt[3] = {mk({k}, {k}, {{0, 0}})};
  std::vector<Mor> mult = {mk({k, k}, {k, k}, {{0, 0}, {1, 1}}), mk({k}, {k}, {{0, 0}})};
  return make_module(S, M, act, amt, mult);
}

}  // namespace sgcat
