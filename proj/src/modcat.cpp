#include "sgcat/modcat.hpp"

#include <stdexcept>

namespace sgcat {

Obj ModuleCat::lift(const Obj& X) const {
  Obj r = X;
  for (auto& v : r) v += nS;
  return r;
}

Obj ModuleCat::local(const Obj& X) const {
  Obj r = X;
  for (auto& v : r) {
    if (v < nS) throw std::logic_error("module object expected");
    v -= nS;
  }
  return r;
}

Category ModuleCat::base() const {
  const Category& C = T.C;
  int n = C.n(), k = m();
  Category M;
  M.field = C.field;
  for (int x = 0; x < k; ++x) M.labels.push_back(C.labels[nS + x].substr(2));
  M.hd.assign(size_t(k) * k, 0);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) M.hd[size_t(x) * k + y] = C.homdim(nS + x, nS + y);
  M.allocate();
  for (int x = 0; x < k; ++x) {
    M.ident[x] = C.ident[nS + x];
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        M.cmp[(size_t(x) * k + y) * k + z] = C.cmp[(size_t(nS + x) * n + nS + y) * n + nS + z];
  }
  return M;
}

static Mor shifted(const Mor& m, int s) {
  Mor r = m;
  for (auto& v : r.src) v += s;
  for (auto& v : r.dst) v += s;
  return r;
}

ModuleCat make_module(const Semigroup& S, const Category& M, const std::vector<Obj>& act,
                      const std::vector<std::vector<Mor>>& amt, const std::vector<Mor>& mult, bool finalize) {
  if (S.C.field != M.field) throw std::invalid_argument("module: field differs from the semigroup's");
  int nS = S.n(), k = M.n(), n = nS + k;
  if (act.size() != size_t(nS) * k) throw std::invalid_argument("module action table has wrong size");
  if (amt.size() != size_t(nS) * nS * k * k) throw std::invalid_argument("module morphism action table has wrong size");
  if (mult.size() != size_t(nS) * nS * k) throw std::invalid_argument("module multiplicativity table has wrong size");
  ModuleCat Mo;
  Mo.nS = nS;
  Semigroup& T = Mo.T;
  Category& C = T.C;
  C.field = S.C.field;
  C.labels = S.C.labels;
  for (const auto& l : M.labels) C.labels.push_back("M:" + l);
  C.hd.assign(size_t(n) * n, 0);
  auto inS = [&](int x) { return x < nS; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (inS(x) && inS(y)) C.hd[size_t(x) * n + y] = S.C.homdim(x, y);
      if (!inS(x) && !inS(y)) C.hd[size_t(x) * n + y] = M.homdim(x - nS, y - nS);
    }
  C.allocate();
  for (int x = 0; x < n; ++x) {
    C.ident[x] = inS(x) ? S.C.ident[x] : M.ident[x - nS];
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (inS(x) && inS(y) && inS(z)) C.cmp[(size_t(x) * n + y) * n + z] = S.C.cmp[(size_t(x) * nS + y) * nS + z];
        if (!inS(x) && !inS(y) && !inS(z))
          C.cmp[(size_t(x) * n + y) * n + z] = M.cmp[(size_t(x - nS) * k + y - nS) * k + z - nS];
      }
  }
  T.tens.assign(size_t(n) * n, Obj{});
  for (int x = 0; x < nS; ++x) {
    for (int y = 0; y < nS; ++y) T.tens[size_t(x) * n + y] = S.t(x, y);
    for (int y = 0; y < k; ++y) {
      for (int v : act[size_t(x) * k + y])
        if (v < 0 || v >= k) throw std::invalid_argument("module action refers to an unknown object");
      T.tens[size_t(x) * n + nS + y] = Mo.lift(act[size_t(x) * k + y]);
    }
  }
  T.allocate();
  for (int x = 0; x < nS; ++x)
    for (int x2 = 0; x2 < nS; ++x2) {
      for (int y = 0; y < nS; ++y)
        for (int y2 = 0; y2 < nS; ++y2) T.mt[((size_t(x) * n + x2) * n + y) * n + y2] = S.mt[((size_t(x) * nS + x2) * nS + y) * nS + y2];
      for (int y = 0; y < k; ++y)
        for (int y2 = 0; y2 < k; ++y2) {
          const auto& src = amt[((size_t(x) * nS + x2) * k + y) * k + y2];
          auto& dst = T.mt[((size_t(x) * n + x2) * n + nS + y) * n + nS + y2];
          if (src.size() != dst.size())
            throw std::invalid_argument("module morphism action cell (" + S.C.labels[x] + "->" + S.C.labels[x2] + "," +
                                        M.labels[y] + "->" + M.labels[y2] + ") has wrong number of entries");
          for (size_t q = 0; q < src.size(); ++q) dst[q] = shifted(src[q], nS);
        }
    }
  for (int x = 0; x < nS; ++x)
    for (int y = 0; y < nS; ++y) {
      for (int z = 0; z < nS; ++z) T.assoc[(size_t(x) * n + y) * n + z] = S.a(x, y, z);
      for (int z = 0; z < k; ++z) T.assoc[(size_t(x) * n + y) * n + nS + z] = shifted(mult[(size_t(x) * nS + y) * k + z], nS);
    }
  if (finalize) T.finalize();
  return Mo;
}

ModuleCat regular_module(const Semigroup& S) {
  std::vector<Obj> act(S.tens);
  std::vector<Mor> mult(S.assoc);
  return make_module(S, S.C, act, S.mt, mult);
}

ModuleCat zero_module(const Semigroup& S, const Category& M) {
  int nS = S.n(), k = M.n();
  std::vector<Obj> act(size_t(nS) * k);
  std::vector<std::vector<Mor>> amt(size_t(nS) * nS * k * k);
  for (int x = 0; x < nS; ++x)
    for (int x2 = 0; x2 < nS; ++x2)
      for (int y = 0; y < k; ++y)
        for (int y2 = 0; y2 < k; ++y2)
          amt[((size_t(x) * nS + x2) * k + y) * k + y2].assign(size_t(S.C.homdim(x, x2)) * M.homdim(y, y2), Mor({}, {}));
  std::vector<Mor> mult(size_t(nS) * nS * k, Mor({}, {}));
  return make_module(S, M, act, amt, mult);
}

Report validate_module(const ModuleCat& Mo) { return validate_semigroup(Mo.T); }

bool covers_module(const ModuleCat& Mo, int* missing) {
  std::vector<char> hit(Mo.m(), 0);
  for (int f = 0; f < Mo.nS; ++f)
    for (int x = 0; x < Mo.m(); ++x)
      for (int y : Mo.act(f, x)) hit[y] = 1;
  for (int y = 0; y < Mo.m(); ++y)
    if (!hit[y]) {
      if (missing) *missing = y;
      return false;
    }
  return true;
}

Mor act_mor(const ModuleCat& Mo, const Mor& Fm, const Mor& f) {
  Mor g = f;
  g.src = Mo.lift(f.src);
  g.dst = Mo.lift(f.dst);
  Mor r = tensor_mor(Mo.T, Fm, g);
  r.src = Mo.local(r.src);
  r.dst = Mo.local(r.dst);
  return r;
}

}  // namespace sgcat
