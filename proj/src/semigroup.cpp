#include "sgcat/semigroup.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace sgcat {

namespace {

// off[i*|B|+j] = first position of block (i,j) in A⊠B, last entry = total size
std::vector<int> tensor_offsets(const Semigroup& S, const Obj& A, const Obj& B) {
  std::vector<int> off(A.size() * B.size() + 1, 0);
  size_t k = 0;
  for (int a : A)
    for (int b : B) {
      off[k + 1] = off[k] + int(S.t(a, b).size());
      ++k;
    }
  return off;
}

std::vector<int> range(int from, int to) {
  std::vector<int> r;
  for (int i = from; i < to; ++i) r.push_back(i);
  return r;
}

void add_scaled_block(const Field& F, Vec& dst, const Q& s, const Vec& src) {
  if (dst.empty()) dst.assign(src.size(), Q(0));
  for (size_t k = 0; k < src.size(); ++k)
    if (!is_zero(src[k])) dst[k] = F.add(dst[k], F.mul(s, src[k]));
}

std::string triple(const Category& C, int x, int y, int z) {
  return "(" + C.labels[x] + "," + C.labels[y] + "," + C.labels[z] + ")";
}

}  // namespace

void Semigroup::allocate() {
  int m = n();
  mt.assign(size_t(m) * m * m * m, {});
  for (int x = 0; x < m; ++x)
    for (int x2 = 0; x2 < m; ++x2)
      for (int y = 0; y < m; ++y)
        for (int y2 = 0; y2 < m; ++y2)
          mt[((size_t(x) * m + x2) * m + y) * m + y2].assign(size_t(C.homdim(x, x2)) * C.homdim(y, y2),
                                                              Mor(t(x, y), t(x2, y2)));
  assoc.assign(size_t(m) * m * m, {});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        assoc[(size_t(x) * m + y) * m + z] = Mor(tensor_obj(*this, t(x, y), {z}), tensor_obj(*this, {x}, t(y, z)));
}

void Semigroup::finalize() {
  assoc_inv.clear();
  int m = n();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        auto inv = mor_inverse(C, a(x, y, z));
        if (!inv) throw std::invalid_argument("associator " + triple(C, x, y, z) + " is not invertible");
        assoc_inv.push_back(*inv);
      }
}

Obj tensor_obj(const Semigroup& S, const Obj& A, const Obj& B) {
  Obj r;
  for (int a : A)
    for (int b : B) {
      const Obj& ab = S.t(a, b);
      r.insert(r.end(), ab.begin(), ab.end());
    }
  return r;
}

std::vector<int> tensor_block(const Semigroup& S, const Obj& A, const Obj& B, int i, int j) {
  int start = 0;
  for (int i2 = 0; i2 < int(A.size()); ++i2)
    for (int j2 = 0; j2 < int(B.size()); ++j2) {
      int sz = int(S.t(A[i2], B[j2]).size());
      if (i2 == i && j2 == j) return range(start, start + sz);
      start += sz;
    }
  throw std::logic_error("tensor_block: index out of range");
}

Mor tensor_mor(const Semigroup& S, const Mor& f, const Mor& g) {
  const Category& C = S.C;
  const Field& F = C.field;
  Mor r(tensor_obj(S, f.src, g.src), tensor_obj(S, f.dst, g.dst));
  auto so = tensor_offsets(S, f.src, g.src);
  auto to = tensor_offsets(S, f.dst, g.dst);
  size_t nb = g.src.size(), nb2 = g.dst.size();
  for (size_t i = 0; i < f.src.size(); ++i)
    for (size_t i2 = 0; i2 < f.dst.size(); ++i2) {
      const Vec& fb = f.at(i2, i);
      if (fb.empty()) continue;
      int x = f.src[i], x2 = f.dst[i2];
      for (size_t j = 0; j < nb; ++j)
        for (size_t j2 = 0; j2 < nb2; ++j2) {
          const Vec& gb = g.at(j2, j);
          if (gb.empty()) continue;
          int y = g.src[j], y2 = g.dst[j2];
          int c0 = so[i * nb + j], r0 = to[i2 * nb2 + j2];
          for (size_t a = 0; a < fb.size(); ++a) {
            if (is_zero(fb[a])) continue;
            for (size_t b = 0; b < gb.size(); ++b) {
              if (is_zero(gb[b])) continue;
              Q s = F.mul(fb[a], gb[b]);
              const Mor& m = S.mtab(x, x2, y, y2, int(a), int(b));
              for (size_t rr = 0; rr < m.dst.size(); ++rr)
                for (size_t cc = 0; cc < m.src.size(); ++cc) {
                  const Vec& v = m.at(rr, cc);
                  if (v.empty()) continue;
                  add_scaled_block(F, r.at(r0 + rr, c0 + cc), s, v);
                }
            }
          }
        }
    }
  for (auto& v : r.blk)
    if (!v.empty() && is_zero(v)) v.clear();
  return r;
}

static Mor assoc_general(const Semigroup& S, const Obj& A, const Obj& B, const Obj& Cc, bool inverse) {
  Obj AB = tensor_obj(S, A, B), BC = tensor_obj(S, B, Cc);
  Obj lhs = tensor_obj(S, AB, Cc), rhs = tensor_obj(S, A, BC);
  auto oAB = tensor_offsets(S, A, B), oBC = tensor_offsets(S, B, Cc);
  auto oL = tensor_offsets(S, AB, Cc), oR = tensor_offsets(S, A, BC);
  Mor r = inverse ? Mor(rhs, lhs) : Mor(lhs, rhs);
  size_t nb = B.size(), nc = Cc.size(), nbc = BC.size();
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < nb; ++j)
      for (size_t k = 0; k < nc; ++k) {
        std::vector<int> src, dst;
        for (int u = oAB[i * nb + j]; u < oAB[i * nb + j + 1]; ++u)
          for (int w = oL[u * nc + k]; w < oL[u * nc + k + 1]; ++w) src.push_back(w);
        for (int v = oBC[j * nc + k]; v < oBC[j * nc + k + 1]; ++v)
          for (int w = oR[i * nbc + v]; w < oR[i * nbc + v + 1]; ++w) dst.push_back(w);
        if (inverse)
          place(r, S.ainv(A[i], B[j], Cc[k]), src, dst);
        else
          place(r, S.a(A[i], B[j], Cc[k]), dst, src);
      }
  return r;
}

Mor assoc_mor(const Semigroup& S, const Obj& A, const Obj& B, const Obj& C) { return assoc_general(S, A, B, C, false); }
Mor assoc_inv_mor(const Semigroup& S, const Obj& A, const Obj& B, const Obj& C) {
  if (S.assoc_inv.empty()) throw std::logic_error("associator inverse not computed");
  return assoc_general(S, A, B, C, true);
}

Mor braid_mor(const Semigroup& S, const Obj& A, const Obj& B) {
  if (!S.braid) throw std::invalid_argument("no braiding present");
  Mor r(tensor_obj(S, A, B), tensor_obj(S, B, A));
  auto oAB = tensor_offsets(S, A, B), oBA = tensor_offsets(S, B, A);
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < B.size(); ++j)
      place(r, (*S.braid)[size_t(A[i]) * S.n() + B[j]], range(oBA[j * A.size() + i], oBA[j * A.size() + i + 1]),
            range(oAB[i * B.size() + j], oAB[i * B.size() + j + 1]));
  return r;
}

// ---------------------------------------------------------------------------

Report validate_semigroup(const Semigroup& S) {
  const Category& C = S.C;
  int n = S.n();
  check_shapes(C);
  if (int(S.tens.size()) != n * n) throw std::invalid_argument("tensor table has wrong size");
  for (const auto& o : S.tens)
    for (int v : o)
      if (v < 0 || v >= n) throw std::invalid_argument("tensor table refers to an unknown object");
  if (S.mt.size() != size_t(n) * n * n * n) throw std::invalid_argument("morphism tensor table has wrong size");
  for (int x = 0; x < n; ++x)
    for (int x2 = 0; x2 < n; ++x2)
      for (int y = 0; y < n; ++y)
        for (int y2 = 0; y2 < n; ++y2) {
          const auto& cell = S.mt[((size_t(x) * n + x2) * n + y) * n + y2];
          std::string where = "morphism tensor cell (" + C.labels[x] + "->" + C.labels[x2] + "," + C.labels[y] +
                              "->" + C.labels[y2] + ")";
          if (cell.size() != size_t(C.homdim(x, x2)) * C.homdim(y, y2))
            throw std::invalid_argument(where + " has wrong number of entries");
          for (const auto& m : cell) {
            if (m.src != S.t(x, y) || m.dst != S.t(x2, y2) || m.blk.size() != m.src.size() * m.dst.size())
              throw std::invalid_argument(where + " has wrong block shape");
            for (size_t r = 0; r < m.dst.size(); ++r)
              for (size_t c = 0; c < m.src.size(); ++c)
                if (!m.at(r, c).empty() && int(m.at(r, c).size()) != C.homdim(m.src[c], m.dst[r]))
                  throw std::invalid_argument(where + " has a block of wrong length");
          }
        }
  if (S.assoc.size() != size_t(n) * n * n) throw std::invalid_argument("associator table has wrong size");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Mor& m = S.a(x, y, z);
        if (m.src != tensor_obj(S, S.t(x, y), {z}) || m.dst != tensor_obj(S, {x}, S.t(y, z)))
          throw std::invalid_argument("associator " + triple(C, x, y, z) + " has wrong shape");
        for (size_t r = 0; r < m.dst.size(); ++r)
          for (size_t c = 0; c < m.src.size(); ++c)
            if (!m.at(r, c).empty() && int(m.at(r, c).size()) != C.homdim(m.src[c], m.dst[r]))
              throw std::invalid_argument("associator " + triple(C, x, y, z) + " has a block of wrong length");
      }

  Report rep;
  // bifunctoriality
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++rep.checked;
      Mor t = tensor_mor(S, id_mor(C, {x}), id_mor(C, {y}));
      if (!mor_equal(C, t, id_mor(C, S.t(x, y)))) rep.fail("id⊠id != id at (" + C.labels[x] + "," + C.labels[y] + ")");
    }
  for (int x = 0; x < n; ++x)
    for (int x2 = 0; x2 < n; ++x2)
      for (int x3 = 0; x3 < n; ++x3)
        for (int y = 0; y < n; ++y)
          for (int y2 = 0; y2 < n; ++y2)
            for (int y3 = 0; y3 < n; ++y3)
              for (int b = 0; b < C.homdim(x, x2); ++b)
                for (int b2 = 0; b2 < C.homdim(x2, x3); ++b2)
                  for (int c = 0; c < C.homdim(y, y2); ++c)
                    for (int c2 = 0; c2 < C.homdim(y2, y3); ++c2) {
                      Mor f = basis_mor(C, x, x2, b), f2 = basis_mor(C, x2, x3, b2);
                      Mor g = basis_mor(C, y, y2, c), g2 = basis_mor(C, y2, y3, c2);
                      Mor lhs = tensor_mor(S, compose(C, f2, f), compose(C, g2, g));
                      Mor rhs = compose(C, tensor_mor(S, f2, g2), tensor_mor(S, f, g));
                      ++rep.checked;
                      if (!mor_equal(C, lhs, rhs)) {
                        std::ostringstream os;
                        os << "interchange fails on basis (" << b << "," << b2 << "," << c << "," << c2 << ") over "
                           << triple(C, x, x2, x3) << " x " << triple(C, y, y2, y3);
                        rep.fail(os.str());
                      }
                    }
  // associator: invertible and natural in each slot
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        ++rep.checked;
        if (!mor_inverse(C, S.a(x, y, z))) rep.fail("associator " + triple(C, x, y, z) + " not invertible");
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int slot = 0; slot < 3; ++slot)
          for (int w = 0; w < n; ++w) {
            int src[3] = {x, y, z}, dst[3] = {x, y, z};
            dst[slot] = w;
            int d = C.homdim(src[slot], w);
            for (int b = 0; b < d; ++b) {
              Mor f[3];
              for (int s = 0; s < 3; ++s) f[s] = id_mor(C, {src[s]});
              f[slot] = basis_mor(C, src[slot], w, b);
              Mor lhs = compose(C, assoc_mor(S, {dst[0]}, {dst[1]}, {dst[2]}),
                                tensor_mor(S, tensor_mor(S, f[0], f[1]), f[2]));
              Mor rhs = compose(C, tensor_mor(S, f[0], tensor_mor(S, f[1], f[2])),
                                assoc_mor(S, {src[0]}, {src[1]}, {src[2]}));
              ++rep.checked;
              if (!mor_equal(C, lhs, rhs)) {
                std::ostringstream os;
                os << "associator not natural in slot " << slot << " at " << triple(C, x, y, z) << " along basis "
                   << b << " to " << C.labels[w];
                rep.fail(os.str());
              }
            }
          }
  // pentagon
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          Obj X{x}, Y{y}, Z{z}, W{w};
          Obj XY = S.t(x, y), ZW = S.t(z, w), YZ = S.t(y, z);
          Mor lhs = compose(C, assoc_mor(S, X, Y, ZW), assoc_mor(S, XY, Z, W));
          Mor rhs = compose_all(C, {tensor_mor(S, id_mor(C, X), assoc_mor(S, Y, Z, W)), assoc_mor(S, X, YZ, W),
                                    tensor_mor(S, assoc_mor(S, X, Y, Z), id_mor(C, W))});
          ++rep.checked;
          if (!mor_equal(C, lhs, rhs))
            rep.fail("pentagon fails on (" + C.labels[x] + "," + C.labels[y] + "," + C.labels[z] + "," +
                     C.labels[w] + ")");
        }
  if (S.braid) {
    const auto& B = *S.braid;
    if (B.size() != size_t(n) * n) throw std::invalid_argument("braiding table has wrong size");
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const Mor& m = B[size_t(x) * n + y];
        if (m.src != S.t(x, y) || m.dst != S.t(y, x))
          throw std::invalid_argument("braiding (" + C.labels[x] + "," + C.labels[y] + ") has wrong shape");
      }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        ++rep.checked;
        Obj X{x}, Y{y};
        if (!mor_equal(C, compose(C, braid_mor(S, Y, X), braid_mor(S, X, Y)), id_mor(C, S.t(x, y))))
          rep.fail("braiding not symmetric at (" + C.labels[x] + "," + C.labels[y] + ")");
        for (int x2 = 0; x2 < n; ++x2)
          for (int y2 = 0; y2 < n; ++y2)
            for (int b = 0; b < C.homdim(x, x2); ++b)
              for (int c = 0; c < C.homdim(y, y2); ++c) {
                Mor f = basis_mor(C, x, x2, b), g = basis_mor(C, y, y2, c);
                ++rep.checked;
                if (!mor_equal(C, compose(C, braid_mor(S, {x2}, {y2}), tensor_mor(S, f, g)),
                               compose(C, tensor_mor(S, g, f), braid_mor(S, X, Y))))
                  rep.fail("braiding not natural at (" + C.labels[x] + "," + C.labels[y] + ")");
              }
      }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          Obj X{x}, Y{y}, Z{z};
          Mor lhs = compose_all(C, {assoc_mor(S, Y, Z, X), braid_mor(S, X, S.t(y, z)), assoc_mor(S, X, Y, Z)});
          Mor rhs = compose_all(C, {tensor_mor(S, id_mor(C, Y), braid_mor(S, X, Z)), assoc_mor(S, Y, X, Z),
                                    tensor_mor(S, braid_mor(S, X, Y), id_mor(C, Z))});
          ++rep.checked;
          if (!mor_equal(C, lhs, rhs)) rep.fail("hexagon fails on " + triple(C, x, y, z));
        }
  }
  return rep;
}

Semigroup reverse(const Semigroup& S) {
  Semigroup R;
  R.C = S.C;
  int n = S.n();
  R.tens.resize(size_t(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) R.tens[size_t(x) * n + y] = S.t(y, x);
  R.mt.assign(size_t(n) * n * n * n, {});
  for (int x = 0; x < n; ++x)
    for (int x2 = 0; x2 < n; ++x2)
      for (int y = 0; y < n; ++y)
        for (int y2 = 0; y2 < n; ++y2) {
          auto& cell = R.mt[((size_t(x) * n + x2) * n + y) * n + y2];
          int dy = S.C.homdim(y, y2);
          for (int i = 0; i < S.C.homdim(x, x2); ++i)
            for (int j = 0; j < dy; ++j) cell.push_back(S.mtab(y, y2, x, x2, j, i));
        }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        R.assoc.push_back(S.ainv(z, y, x));
        R.assoc_inv.push_back(S.a(z, y, x));
      }
  if (S.braid) {
    std::vector<Mor> b;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) b.push_back((*S.braid)[size_t(y) * n + x]);
    R.braid = b;
  }
  return R;
}

// ---- trees ----------------------------------------------------------------

TreeP L(const Obj& A) {
  auto t = std::make_shared<Tree>();
  t->leaf = A;
  return t;
}

TreeP N(TreeP a, TreeP b) {
  auto t = std::make_shared<Tree>();
  t->l = std::move(a);
  t->r = std::move(b);
  return t;
}

TreeP lnorm_tree(const std::vector<Obj>& letters) {
  if (letters.empty()) throw std::logic_error("lnorm_tree: no letters");
  TreeP t = L(letters[0]);
  for (size_t i = 1; i < letters.size(); ++i) t = N(t, L(letters[i]));
  return t;
}

std::vector<Obj> leaves(const TreeP& t) {
  if (t->is_leaf()) return {t->leaf};
  auto a = leaves(t->l), b = leaves(t->r);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Obj tree_obj(const Semigroup& S, const TreeP& t) {
  if (t->is_leaf()) return t->leaf;
  return tensor_obj(S, tree_obj(S, t->l), tree_obj(S, t->r));
}

Obj lnorm_obj(const Semigroup& S, const std::vector<Obj>& letters) {
  Obj r = letters.at(0);
  for (size_t i = 1; i < letters.size(); ++i) r = tensor_obj(S, r, letters[i]);
  return r;
}

namespace {

std::vector<Obj> init(std::vector<Obj> v) {
  v.pop_back();
  return v;
}

// lnorm(Ll) ⊠ lnorm(Lr) -> lnorm(Ll ++ Lr) and back
Mor merge(const Semigroup& S, const std::vector<Obj>& Ll, const std::vector<Obj>& Lr, bool back) {
  Obj P = lnorm_obj(S, Ll);
  if (Lr.size() == 1) return id_mor(S.C, tensor_obj(S, P, Lr[0]));
  Obj Qo = lnorm_obj(S, init(Lr));
  const Obj& rm = Lr.back();
  Mor inner = tensor_mor(S, merge(S, Ll, init(Lr), back), id_mor(S.C, rm));
  if (!back) return compose(S.C, inner, assoc_inv_mor(S, P, Qo, rm));
  return compose(S.C, assoc_mor(S, P, Qo, rm), inner);
}

}  // namespace

Mor to_lnorm(const Semigroup& S, const TreeP& t) {
  if (t->is_leaf()) return id_mor(S.C, t->leaf);
  Mor f = tensor_mor(S, to_lnorm(S, t->l), to_lnorm(S, t->r));
  return compose(S.C, merge(S, leaves(t->l), leaves(t->r), false), f);
}

Mor from_lnorm(const Semigroup& S, const TreeP& t) {
  if (t->is_leaf()) return id_mor(S.C, t->leaf);
  Mor f = tensor_mor(S, from_lnorm(S, t->l), from_lnorm(S, t->r));
  return compose(S.C, f, merge(S, leaves(t->l), leaves(t->r), true));
}

Mor rebracket(const Semigroup& S, const TreeP& from, const TreeP& to) {
  if (leaves(from) != leaves(to)) throw std::logic_error("rebracket: different letters");
  return compose(S.C, from_lnorm(S, to), to_lnorm(S, from));
}

Chain::Chain(const Semigroup& S, std::vector<Obj> letters) : S_(&S), letters_(std::move(letters)) {
  acc_ = id_mor(S.C, lnorm_obj(S, letters_));
}

Chain::Chain(const Semigroup& S, const TreeP& t) : S_(&S), letters_(leaves(t)) { acc_ = to_lnorm(S, t); }

void Chain::apply(int pos, int len, const Mor& m, const TreeP& in, const TreeP& out) {
  const Semigroup& S = *S_;
  std::vector<Obj> pre(letters_.begin(), letters_.begin() + pos);
  std::vector<Obj> mid(letters_.begin() + pos, letters_.begin() + pos + len);
  std::vector<Obj> suf(letters_.begin() + pos + len, letters_.end());
  if (leaves(in) != mid) throw std::logic_error("Chain::apply: window does not match input tree");
  if (m.src != tree_obj(S, in) || m.dst != tree_obj(S, out)) throw std::logic_error("Chain::apply: morphism shape");
  TreeP t1 = in, t2 = out;
  Mor w = m;
  if (!pre.empty()) {
    TreeP p = lnorm_tree(pre);
    t1 = N(p, t1);
    t2 = N(p, t2);
    w = tensor_mor(S, id_mor(S.C, tree_obj(S, p)), w);
  }
  for (const auto& s : suf) {
    t1 = N(t1, L(s));
    t2 = N(t2, L(s));
    w = tensor_mor(S, w, id_mor(S.C, s));
  }
  acc_ = compose_all(S.C, {to_lnorm(S, t2), w, from_lnorm(S, t1), acc_});
  letters_ = leaves(t2);
}

// ---- functors -------------------------------------------------------------

Obj Functor::obj(const Semigroup& S, const Obj& Y) const {
  switch (kind) {
    case Kind::Id: return Y;
    case Kind::Left: return tensor_obj(S, A, Y);
    case Kind::Right: return tensor_obj(S, Y, A);
  }
  return Y;
}

Mor Functor::mor(const Semigroup& S, const Mor& f) const {
  switch (kind) {
    case Kind::Id: return f;
    case Kind::Left: return tensor_mor(S, id_mor(S.C, A), f);
    case Kind::Right: return tensor_mor(S, f, id_mor(S.C, A));
  }
  return f;
}

std::vector<int> Functor::embed(const Semigroup& S, const Obj& Y, const std::vector<int>& P) const {
  if (kind == Kind::Id) return P;
  std::vector<int> r;
  if (kind == Kind::Left) {
    auto off = tensor_offsets(S, A, Y);
    for (size_t i = 0; i < A.size(); ++i)
      for (int p : P)
        for (int k = off[i * Y.size() + p]; k < off[i * Y.size() + p + 1]; ++k) r.push_back(k);
  } else {
    auto off = tensor_offsets(S, Y, A);
    for (int p : P)
      for (size_t i = 0; i < A.size(); ++i)
        for (int k = off[p * A.size() + i]; k < off[p * A.size() + i + 1]; ++k) r.push_back(k);
  }
  return r;
}

std::string Functor::str(const Category& C) const {
  switch (kind) {
    case Kind::Id: return "Id";
    case Kind::Left: return C.obj_str(A) + "⊠-";
    case Kind::Right: return "-⊠" + C.obj_str(A);
  }
  return "?";
}

Mor Transform::at(const Semigroup& S, const Obj& Y) const {
  Mor r(F.obj(S, Y), G.obj(S, Y));
  for (size_t j = 0; j < Y.size(); ++j) {
    std::vector<int> P{int(j)};
    place(r, comp.at(Y[j]), G.embed(S, Y, P), F.embed(S, Y, P));
  }
  return r;
}

int transform_dim(const Semigroup& S, const Functor& F, const Functor& G) {
  int d = 0;
  for (int x = 0; x < S.n(); ++x) d += mor_dim(S.C, F.obj(S, {x}), G.obj(S, {x}));
  return d;
}

Transform transform_from(const Semigroup& S, const Functor& F, const Functor& G, const Vec& v, size_t off) {
  Transform t{F, G, {}};
  for (int x = 0; x < S.n(); ++x) {
    Obj s = F.obj(S, {x}), d = G.obj(S, {x});
    t.comp.push_back(unflatten(S.C, s, d, v, off));
    off += mor_dim(S.C, s, d);
  }
  return t;
}

Vec transform_flat(const Semigroup& S, const Transform& t) {
  Vec v;
  for (const auto& c : t.comp) {
    Vec f = flatten(S.C, c);
    v.insert(v.end(), f.begin(), f.end());
  }
  return v;
}

Transform transform_combine(const Semigroup& S, const std::vector<Transform>& basis, const Vec& coeff) {
  if (basis.empty()) throw std::logic_error("transform_combine: empty basis");
  Vec acc(transform_flat(S, basis[0]).size());
  for (size_t k = 0; k < basis.size(); ++k) {
    if (is_zero(coeff[k])) continue;
    Vec f = transform_flat(S, basis[k]);
    for (size_t i = 0; i < acc.size(); ++i) acc[i] = S.C.field.add(acc[i], S.C.field.mul(coeff[k], f[i]));
  }
  return transform_from(S, basis[0].F, basis[0].G, acc);
}

namespace {

// structure map F(Y⊠H) -> F(Y)⊠H (right-module) or F(H⊠Y) -> H⊠F(Y) (left-module)
Mor structure(const Semigroup& S, Flavor fl, const Functor& F, const Obj& Y, const Obj& H) {
  using K = Functor::Kind;
  if (F.kind == K::Id) return id_mor(S.C, fl == Flavor::RightModule ? tensor_obj(S, Y, H) : tensor_obj(S, H, Y));
  if (fl == Flavor::RightModule && F.kind == K::Left) return assoc_inv_mor(S, F.A, Y, H);
  if (fl == Flavor::LeftModule && F.kind == K::Right) return assoc_mor(S, H, Y, F.A);
  throw std::invalid_argument("no module structure on " + F.str(S.C) + " for this flavor");
}

void append(Vec& out, const Category& C, const Mor& a, const Mor& b) {
  Vec d = flatten(C, mor_sub(C, a, b));
  out.insert(out.end(), d.begin(), d.end());
}

}  // namespace

static void residual_parts(const Semigroup& S, Flavor fl, const Transform& t,
                           const std::function<void(const std::string&, const Mor&, const Mor&)>& emit,
                           bool naturality = true) {
  const Category& C = S.C;
  int n = S.n();
  for (int x = 0; x < n && naturality; ++x)
    for (int y = 0; y < n; ++y)
      for (int b = 0; b < C.homdim(x, y); ++b) {
        Mor f = basis_mor(C, x, y, b);
        emit("naturality at " + C.labels[x] + "->" + C.labels[y] + " basis " + std::to_string(b),
             compose(C, t.G.mor(S, f), t.comp[x]), compose(C, t.comp[y], t.F.mor(S, f)));
      }
  if (fl == Flavor::Plain) return;
  for (int y = 0; y < n; ++y)
    for (int h = 0; h < n; ++h) {
      Obj Y{y}, H{h};
      std::string w = "equivariance at (" + C.labels[y] + "," + C.labels[h] + ")";
      if (fl == Flavor::RightModule) {
        Obj YH = tensor_obj(S, Y, H);
        emit(w, compose(C, structure(S, fl, t.G, Y, H), t.at(S, YH)),
             compose(C, tensor_mor(S, t.at(S, Y), id_mor(C, H)), structure(S, fl, t.F, Y, H)));
      } else {
        Obj HY = tensor_obj(S, H, Y);
        emit(w, compose(C, structure(S, fl, t.G, Y, H), t.at(S, HY)),
             compose(C, tensor_mor(S, id_mor(C, H), t.at(S, Y)), structure(S, fl, t.F, Y, H)));
      }
    }
}

Vec transform_residual(const Semigroup& S, Flavor fl, const Transform& t) {
  Vec out;
  residual_parts(S, fl, t, [&](const std::string&, const Mor& a, const Mor& b) { append(out, S.C, a, b); });
  return out;
}

Report check_transform(const Semigroup& S, Flavor fl, const Transform& t, bool naturality) {
  Report r;
  residual_parts(
      S, fl, t,
      [&](const std::string& w, const Mor& a, const Mor& b) {
        ++r.checked;
        if (!mor_equal(S.C, a, b)) r.fail(w);
      },
      naturality);
  return r;
}

std::vector<Transform> nat_module_space(const Semigroup& S, Flavor fl, const Functor& F, const Functor& G) {
  int nv = transform_dim(S, F, G);
  Mat A = linear_map_matrix(nv, [&](const Vec& v) {
    if (v.empty()) return transform_residual(S, fl, transform_from(S, F, G, Vec(nv)));
    return transform_residual(S, fl, transform_from(S, F, G, v));
  });
  Mat K = kernel(S.C.field, A);
  std::vector<Transform> basis;
  for (int j = 0; j < K.cols; ++j) basis.push_back(transform_from(S, F, G, K.col(j)));
  return basis;
}

}  // namespace sgcat
