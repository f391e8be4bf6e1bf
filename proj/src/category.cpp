#include "sgcat/category.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sgcat {

bool same_multiset(Obj a, Obj b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Obj concat(const Obj& a, const Obj& b) {
  Obj r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

int Category::index_of(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

std::string Category::obj_str(const Obj& A) const {
  if (A.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < A.size(); ++i) {
    if (i) s += "+";
    s += labels.at(A[i]);
  }
  return s;
}

void Category::allocate() {
  int m = n();
  hd.resize(size_t(m) * m, 0);
  cmp.assign(size_t(m) * m * m, {});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        cmp[(size_t(x) * m + y) * m + z].assign(size_t(homdim(x, y)) * homdim(y, z), Vec(homdim(x, z)));
  ident.assign(m, {});
  for (int x = 0; x < m; ++x) ident[x].assign(homdim(x, x), Q(0));
}

Vec compose_vec(const Category& C, int x, int y, int z, const Vec& g, const Vec& f) {
  const Field& F = C.field;
  Vec r(C.homdim(x, z));
  if (g.empty() || f.empty()) return r;
  int dxy = C.homdim(x, y), dyz = C.homdim(y, z);
  const auto& tab = C.cmp[(size_t(x) * C.n() + y) * C.n() + z];
  for (int i = 0; i < dxy; ++i) {
    if (is_zero(f[i])) continue;
    for (int j = 0; j < dyz; ++j) {
      if (is_zero(g[j])) continue;
      const Vec& c = tab[size_t(j) * dxy + i];
      Q s = f[i] * g[j];
      for (size_t k = 0; k < r.size(); ++k)
        if (!is_zero(c[k])) r[k] += s * c[k];
    }
  }
  if (F.is_prime())
    for (auto& v : r) v = F.norm(v);
  return r;
}

Mor zero_mor(const Obj& src, const Obj& dst) { return Mor(src, dst); }

Mor id_mor(const Category& C, const Obj& A) {
  Mor m(A, A);
  for (size_t i = 0; i < A.size(); ++i) m.at(i, i) = C.ident[A[i]];
  return m;
}

Mor basis_mor(const Category& C, int x, int y, int i) {
  Mor m(Obj{x}, Obj{y});
  Vec v(C.homdim(x, y));
  v.at(i) = 1;
  m.at(0, 0) = v;
  return m;
}

Mor compose(const Category& C, const Mor& g, const Mor& f) {
  if (f.dst != g.src)
    throw std::logic_error("compose: object mismatch " + C.obj_str(f.dst) + " vs " + C.obj_str(g.src));
  Mor h(f.src, g.dst);
  const Field& F = C.field;
  for (size_t r = 0; r < g.dst.size(); ++r)
    for (size_t c = 0; c < f.src.size(); ++c) {
      Vec acc;
      for (size_t m = 0; m < f.dst.size(); ++m) {
        const Vec& gb = g.at(r, m);
        const Vec& fb = f.at(m, c);
        if (gb.empty() || fb.empty()) continue;
        Vec t = compose_vec(C, f.src[c], f.dst[m], g.dst[r], gb, fb);
        if (acc.empty())
          acc = std::move(t);
        else
          for (size_t k = 0; k < acc.size(); ++k) acc[k] = F.add(acc[k], t[k]);
      }
      if (!acc.empty() && !is_zero(acc)) h.at(r, c) = std::move(acc);
    }
  return h;
}

Mor compose_all(const Category& C, const std::vector<Mor>& chain) {
  if (chain.empty()) throw std::logic_error("compose_all: empty chain");
  Mor r = chain.back();
  for (size_t i = chain.size() - 1; i-- > 0;) r = compose(C, chain[i], r);
  return r;
}

static Mor combine(const Category& C, const Mor& a, const Mor& b, bool subtract) {
  if (a.src != b.src || a.dst != b.dst) throw std::logic_error("mor add: shape mismatch");
  Mor r = a;
  const Field& F = C.field;
  for (size_t k = 0; k < r.blk.size(); ++k) {
    const Vec& y = b.blk[k];
    if (y.empty()) continue;
    Vec& x = r.blk[k];
    if (x.empty()) x.assign(y.size(), Q(0));
    for (size_t i = 0; i < x.size(); ++i) x[i] = subtract ? F.sub(x[i], y[i]) : F.add(x[i], y[i]);
    if (is_zero(x)) x.clear();
  }
  return r;
}

Mor mor_add(const Category& C, const Mor& a, const Mor& b) { return combine(C, a, b, false); }
Mor mor_sub(const Category& C, const Mor& a, const Mor& b) { return combine(C, a, b, true); }

Mor mor_scale(const Category& C, const Q& s, const Mor& a) {
  Mor r = a;
  for (auto& x : r.blk) {
    for (auto& v : x) v = C.field.mul(s, v);
    if (!x.empty() && is_zero(x)) x.clear();
  }
  return r;
}

bool mor_is_zero(const Mor& a) {
  for (const auto& x : a.blk)
    if (!x.empty() && !is_zero(x)) return false;
  return true;
}

bool mor_equal(const Category& C, const Mor& a, const Mor& b) {
  if (a.src != b.src || a.dst != b.dst) return false;
  return mor_is_zero(mor_sub(C, a, b));
}

Vec block(const Category& C, const Mor& m, size_t r, size_t c) {
  const Vec& v = m.at(r, c);
  if (!v.empty()) return v;
  return Vec(C.homdim(m.src[c], m.dst[r]));
}

int mor_dim(const Category& C, const Obj& src, const Obj& dst) {
  int d = 0;
  for (int y : dst)
    for (int x : src) d += C.homdim(x, y);
  return d;
}

Vec flatten(const Category& C, const Mor& m) {
  Vec v;
  v.reserve(mor_dim(C, m.src, m.dst));
  for (size_t r = 0; r < m.dst.size(); ++r)
    for (size_t c = 0; c < m.src.size(); ++c) {
      const Vec& b = m.at(r, c);
      int d = C.homdim(m.src[c], m.dst[r]);
      if (b.empty())
        v.insert(v.end(), d, Q(0));
      else
        v.insert(v.end(), b.begin(), b.end());
    }
  return v;
}

Mor unflatten(const Category& C, const Obj& src, const Obj& dst, const Vec& v, size_t off) {
  Mor m(src, dst);
  for (size_t r = 0; r < dst.size(); ++r)
    for (size_t c = 0; c < src.size(); ++c) {
      int d = C.homdim(src[c], dst[r]);
      Vec b(v.begin() + off, v.begin() + off + d);
      off += d;
      if (!is_zero(b)) m.at(r, c) = std::move(b);
    }
  return m;
}

void place(Mor& big, const Mor& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != m.dst.size() || cols.size() != m.src.size()) throw std::logic_error("place: shape mismatch");
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) {
      if (big.dst[rows[r]] != m.dst[r] || big.src[cols[c]] != m.src[c]) throw std::logic_error("place: label mismatch");
      big.at(rows[r], cols[c]) = m.at(r, c);
    }
}

Mor submor(const Mor& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Obj s, d;
  for (int c : cols) s.push_back(m.src[c]);
  for (int r : rows) d.push_back(m.dst[r]);
  Mor x(s, d);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) x.at(r, c) = m.at(rows[r], cols[c]);
  return x;
}

std::optional<Mor> mor_inverse(const Category& C, const Mor& f) {
  // g o f = id_src and f o g = id_dst
  int nv = mor_dim(C, f.dst, f.src);
  auto fn = [&](const Vec& x) {
    Mor g = unflatten(C, f.dst, f.src, x);
    Vec a = flatten(C, mor_sub(C, compose(C, g, f), id_mor(C, f.src)));
    Vec b = flatten(C, mor_sub(C, compose(C, f, g), id_mor(C, f.dst)));
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto [A, b] = affine_system(C.field, nv, fn);
  for (auto& x : b) x = C.field.neg(x);
  Solution s = solve(C.field, A, b);
  if (!s.consistent) return std::nullopt;
  return unflatten(C, f.dst, f.src, s.particular);
}

void check_shapes(const Category& C) {
  int n = C.n();
  if (int(C.hd.size()) != n * n) throw std::invalid_argument("hom dimension table has wrong size");
  if (int(C.cmp.size()) != n * n * n) throw std::invalid_argument("composition table has wrong size");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const auto& t = C.cmp[(size_t(x) * n + y) * n + z];
        std::string cell = "(" + C.labels[x] + "," + C.labels[y] + "," + C.labels[z] + ")";
        if (t.size() != size_t(C.homdim(x, y)) * C.homdim(y, z))
          throw std::invalid_argument("composition cell " + cell + " has wrong number of entries");
        for (const auto& v : t)
          if (int(v.size()) != C.homdim(x, z))
            throw std::invalid_argument("structure-constant vector of wrong length in cell " + cell);
      }
  if (int(C.ident.size()) != n) throw std::invalid_argument("identity table has wrong size");
  for (int x = 0; x < n; ++x)
    if (int(C.ident[x].size()) != C.homdim(x, x))
      throw std::invalid_argument("identity of " + C.labels[x] + " has wrong length");
}

Report validate_presentation(const Category& C) {
  check_shapes(C);
  Report rep;
  int n = C.n();
  auto unit = [&](int x, int y, int i) {
    Vec v(C.homdim(x, y));
    v[i] = 1;
    return v;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int i = 0; i < C.homdim(x, y); ++i) {
        Vec f = unit(x, y, i);
        ++rep.checked;
        if (compose_vec(C, x, y, y, C.ident[y], f) != f)
          rep.fail("left identity fails on " + C.labels[x] + "->" + C.labels[y] + " basis " + std::to_string(i));
        if (compose_vec(C, x, x, y, f, C.ident[x]) != f)
          rep.fail("right identity fails on " + C.labels[x] + "->" + C.labels[y] + " basis " + std::to_string(i));
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          for (int i = 0; i < C.homdim(x, y); ++i)
            for (int j = 0; j < C.homdim(y, z); ++j)
              for (int k = 0; k < C.homdim(z, w); ++k) {
                Vec f = unit(x, y, i), g = unit(y, z, j), h = unit(z, w, k);
                Vec a = compose_vec(C, x, z, w, h, compose_vec(C, x, y, z, g, f));
                Vec b = compose_vec(C, x, y, w, compose_vec(C, y, z, w, h, g), f);
                ++rep.checked;
                if (a != b) {
                  std::ostringstream os;
                  os << "associativity fails on triple (" << i << "," << j << "," << k << ") over objects (" << C.labels[x]
                     << "," << C.labels[y] << "," << C.labels[z] << "," << C.labels[w] << ")";
                  rep.fail(os.str());
                }
              }
  return rep;
}

int Ideal::total() const {
  int t = 0;
  for (const auto& m : sub) t += m.cols;
  return t;
}

Ideal zero_ideal(const Category& C) {
  Ideal I;
  int n = C.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) I.sub.push_back(Mat(C.homdim(x, y), 0));
  return I;
}

Ideal full_ideal(const Category& C) {
  Ideal I;
  int n = C.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) I.sub.push_back(Mat::identity(C.homdim(x, y)));
  return I;
}

bool ideal_contains(const Category& C, const Ideal& I, int x, int y, const Vec& v) {
  const Mat& B = I.sub[size_t(x) * C.n() + y];
  if (is_zero(v)) return true;
  if (B.cols == 0) return false;
  return solve(C.field, B, v).consistent;
}

bool ideal_is_closed(const Category& C, const Ideal& I) {
  int n = C.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Mat& B = I.sub[size_t(x) * n + y];
      for (int k = 0; k < B.cols; ++k) {
        Vec f = B.col(k);
        for (int z = 0; z < n; ++z) {
          for (int j = 0; j < C.homdim(y, z); ++j) {
            Vec g(C.homdim(y, z));
            g[j] = 1;
            if (!ideal_contains(C, I, x, z, compose_vec(C, x, y, z, g, f))) return false;
          }
          for (int j = 0; j < C.homdim(z, x); ++j) {
            Vec g(C.homdim(z, x));
            g[j] = 1;
            if (!ideal_contains(C, I, z, y, compose_vec(C, z, x, y, f, g))) return false;
          }
        }
      }
    }
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.sub.size() != b.sub.size()) return false;
  for (size_t i = 0; i < a.sub.size(); ++i)
    if (a.sub[i].cols != b.sub[i].cols) return false;
  return true;  // callers compare nested ideals, so equal dimensions suffice
}

static bool end_commutative(const Category& C, int x) {
  int d = C.homdim(x, x);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (C.cst(x, x, x, i, j) != C.cst(x, x, x, j, i)) return false;
  return true;
}

Mat end_radical(const Category& C, int x) {
  const Field& F = C.field;
  int d = C.homdim(x, x);
  if (d == 0) return Mat(0, 0);
  if (!F.is_prime()) {
    // kernel of the trace form tr(L_{ab})
    Vec tr(d);
    for (int m = 0; m < d; ++m)
      for (int i = 0; i < d; ++i) tr[m] = F.add(tr[m], C.cst(x, x, x, i, m)[i]);
    Mat T(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const Vec& ab = C.cst(x, x, x, b, a);  // b_a o b_b
        Q s = 0;
        for (int m = 0; m < d; ++m) s = F.add(s, F.mul(ab[m], tr[m]));
        T(a, b) = s;
      }
    return kernel(F, T);
  }
  if (!end_commutative(C, x))
    throw RadicalUnavailable("radical unavailable: End(" + C.labels[x] +
                             ") is non-commutative in positive characteristic");
  // kernel of an iterated Frobenius a -> a^(p^m), p^m >= d
  long p = F.p();
  long q = p;
  while (q < d) q *= p;
  auto power = [&](Vec a, long e) {
    Vec r = C.ident[x];
    Vec base = std::move(a);
    while (e > 0) {
      if (e & 1) r = compose_vec(C, x, x, x, base, r);
      e >>= 1;
      if (e) base = compose_vec(C, x, x, x, base, base);
    }
    return r;
  };
  std::vector<Vec> cols;
  for (int i = 0; i < d; ++i) {
    Vec e(d);
    e[i] = 1;
    cols.push_back(power(e, q));
  }
  return kernel(F, Mat::from_columns(d, cols));
}

Ideal radical(const Category& C) {
  int n = C.n();
  const Field& F = C.field;
  std::vector<Mat> J(n);
  std::vector<Mat> Jproj(n);
  for (int x = 0; x < n; ++x) {
    J[x] = end_radical(C, x);
    Jproj[x] = cokernel(F, J[x]).proj;
  }
  Ideal I;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) {
        I.sub.push_back(J[x]);
        continue;
      }
      int dxy = C.homdim(x, y), dyx = C.homdim(y, x);
      std::vector<Mat> parts;
      for (int j = 0; j < dyx; ++j) {
        Vec g(dyx);
        g[j] = 1;
        Mat M(C.homdim(x, x), dxy);
        for (int i = 0; i < dxy; ++i) {
          Vec f(dxy);
          f[i] = 1;
          M.set_col(i, compose_vec(C, x, y, x, g, f));
        }
        parts.push_back(mat_mul(F, Jproj[x], M));
      }
      if (parts.empty())
        I.sub.push_back(Mat::identity(dxy));
      else
        I.sub.push_back(kernel(F, vstack(parts, dxy)));
    }
  return I;
}

Report local_end_check(const Category& C) {
  Report r;
  for (int x = 0; x < C.n(); ++x) {
    ++r.checked;
    int d = C.homdim(x, x);
    int j = end_radical(C, x).cols;
    if (d - j != 1)
      r.fail("End(" + C.labels[x] + ")/Rad has dimension " + std::to_string(d - j));
  }
  return r;
}

std::optional<Mor> split_test(const Category& C, const Mor& f, SplitDir dir) {
  int nv = mor_dim(C, f.dst, f.src);
  auto fn = [&](const Vec& x) {
    Mor s = unflatten(C, f.dst, f.src, x);
    if (dir == SplitDir::Epi) return flatten(C, mor_sub(C, compose(C, f, s), id_mor(C, f.dst)));
    return flatten(C, mor_sub(C, compose(C, s, f), id_mor(C, f.src)));
  };
  auto [A, b] = affine_system(C.field, nv, fn);
  for (auto& x : b) x = C.field.neg(x);
  Solution s = solve(C.field, A, b);
  if (!s.consistent) return std::nullopt;
  return unflatten(C, f.dst, f.src, s.particular);
}

Category opposite(const Category& C) {
  Category D;
  D.field = C.field;
  D.labels = C.labels;
  int n = C.n();
  D.hd.resize(size_t(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) D.hd[size_t(x) * n + y] = C.homdim(y, x);
  D.allocate();
  // in D: b_j o b_i for b_i: x->y, b_j: y->z equals (b_i o b_j) in C with b_j: z->y, b_i: y->x
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int i = 0; i < D.homdim(x, y); ++i)
          for (int j = 0; j < D.homdim(y, z); ++j)
            D.cmp[(size_t(x) * n + y) * n + z][size_t(j) * D.homdim(x, y) + i] = C.cst(z, y, x, j, i);
  D.ident = C.ident;
  return D;
}

}  // namespace sgcat
