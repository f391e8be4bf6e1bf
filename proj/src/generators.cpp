#include "sgcat/generators.hpp"

#include <stdexcept>

namespace sgcat {

bool Algebra::commutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (mult[i][j] != mult[j][i]) return false;
  return true;
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  Vec r(dim);
  for (int i = 0; i < dim; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (is_zero(b[j])) continue;
      Q s = field.mul(a[i], b[j]);
      for (int k = 0; k < dim; ++k) r[k] = field.add(r[k], field.mul(s, mult[i][j][k]));
    }
  }
  return r;
}

static Vec unit_vec(int d, int i) {
  Vec v(d);
  v[i] = 1;
  return v;
}

Algebra algebra_k(const Field& F) {
  Algebra A{F, 1, {{Vec{1}}}, Vec{1}, {Vec{1}}};
  return A;
}

Algebra algebra_dual_numbers(const Field& F) {
  Algebra A{F, 2, {}, Vec{1, 0}, {Vec{1, 0}}};
  A.mult = {{Vec{1, 0}, Vec{0, 1}}, {Vec{0, 1}, Vec{0, 0}}};
  return A;
}

Algebra algebra_k_times_k(const Field& F) {
  Algebra A{F, 2, {}, Vec{1, 1}, {Vec{1, 0}, Vec{0, 1}}};
  A.mult = {{Vec{1, 0}, Vec{0, 0}}, {Vec{0, 0}, Vec{0, 1}}};
  return A;
}

Algebra group_algebra(const Field& F, const std::vector<std::vector<int>>& table) {
  int d = int(table.size());
  Algebra A{F, d, {}, unit_vec(d, 0), {}};
  A.mult.assign(d, std::vector<Vec>(d));
  for (int g = 0; g < d; ++g)
    for (int h = 0; h < d; ++h) A.mult[g][h] = unit_vec(d, table[g][h]);
  A.idem = {A.one};
  return A;
}

std::vector<std::vector<int>> cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

void check_algebra(const Algebra& A) {
  const Field& F = A.field;
  if (int(A.mult.size()) != A.dim) throw std::invalid_argument("algebra: multiplication table has wrong size");
  for (const auto& row : A.mult) {
    if (int(row.size()) != A.dim) throw std::invalid_argument("algebra: multiplication table has wrong size");
    for (const auto& v : row)
      if (int(v.size()) != A.dim) throw std::invalid_argument("algebra: product vector of wrong length");
  }
  for (int i = 0; i < A.dim; ++i) {
    Vec e = unit_vec(A.dim, i);
    if (A.mul(A.one, e) != e || A.mul(e, A.one) != e) throw std::invalid_argument("algebra: unit law fails");
    for (int j = 0; j < A.dim; ++j)
      for (int k = 0; k < A.dim; ++k) {
        Vec b = unit_vec(A.dim, j), c = unit_vec(A.dim, k);
        if (A.mul(A.mul(e, b), c) != A.mul(e, A.mul(b, c)))
          throw std::invalid_argument("algebra: multiplication is not associative");
      }
  }
  Vec sum(A.dim);
  for (size_t i = 0; i < A.idem.size(); ++i) {
    for (int k = 0; k < A.dim; ++k) sum[k] = F.add(sum[k], A.idem[i][k]);
    for (size_t j = 0; j < A.idem.size(); ++j) {
      Vec p = A.mul(A.idem[i], A.idem[j]);
      if (p != (i == j ? A.idem[i] : Vec(A.dim))) throw std::invalid_argument("algebra: idempotents not orthogonal");
    }
  }
  if (sum != A.one) throw std::invalid_argument("algebra: idempotents do not sum to 1");
}

// ---------------------------------------------------------------------------

namespace {

void finish(Semigroup& S) {
  S.finalize();
  Report r = validate_semigroup(S);
  if (!r.pass) throw std::invalid_argument("generated data is not a semigroup category: " + r.failures.front());
}

Mor one_block(const Obj& s, const Obj& d, size_t r, size_t c, const Vec& v) {
  Mor m(s, d);
  m.at(r, c) = v;
  return m;
}

}  // namespace

Semigroup gen_zero(const Field& F) {
  Semigroup S;
  Category& C = S.C;
  C.field = F;
  C.labels = {"X", "Y"};
  C.hd = {1, 1, 0, 1};
  C.allocate();
  C.cmp[(0 * 2 + 0) * 2 + 0][0] = Vec{1};
  C.cmp[(0 * 2 + 0) * 2 + 1][0] = Vec{1};
  C.cmp[(0 * 2 + 1) * 2 + 1][0] = Vec{1};
  C.cmp[(1 * 2 + 1) * 2 + 1][0] = Vec{1};
  C.ident = {Vec{1}, Vec{1}};
  S.tens.assign(4, Obj{});
  S.allocate();
  finish(S);
  return S;
}

Semigroup gen_linear_semigroup(const Field& F, const std::vector<std::string>& elements,
                               const std::vector<std::vector<int>>& table) {
  int n = int(elements.size());
  if (int(table.size()) != n) throw std::invalid_argument("semigroup table has wrong size");
  for (const auto& row : table) {
    if (int(row.size()) != n) throw std::invalid_argument("semigroup table has wrong size");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("semigroup table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument("semigroup table is not associative at (" + elements[a] + "," + elements[b] +
                                      "," + elements[c] + ")");
  Semigroup S;
  Category& C = S.C;
  C.field = F;
  C.labels = elements;
  C.hd.assign(size_t(n) * n, 0);
  for (int x = 0; x < n; ++x) C.hd[size_t(x) * n + x] = 1;
  C.allocate();
  for (int x = 0; x < n; ++x) {
    C.cmp[(size_t(x) * n + x) * n + x][0] = Vec{1};
    C.ident[x] = Vec{1};
  }
  S.tens.resize(size_t(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) S.tens[size_t(x) * n + y] = Obj{table[x][y]};
  S.allocate();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Obj o{table[x][y]};
      S.mt[((size_t(x) * n + x) * n + y) * n + y][0] = one_block(o, o, 0, 0, Vec{1});
      for (int z = 0; z < n; ++z) {
        Obj w{table[table[x][y]][z]};
        S.assoc[(size_t(x) * n + y) * n + z] = one_block(w, w, 0, 0, Vec{1});
      }
    }
  finish(S);
  return S;
}

// ---- projective bimodules ---------------------------------------------------

namespace {

struct Corner {
  std::vector<Vec> basis;  // elements of A
  Mat coords;              // solves basis coordinates: columns = basis
};

}  // namespace

Semigroup gen_bimodule_proj(const Algebra& A) {
  check_algebra(A);
  const Field& F = A.field;
  int r = int(A.idem.size());
  int d = A.dim;
  // corners e_i A e_j
  std::vector<std::vector<Vec>> corner(size_t(r) * r);
  std::vector<Mat> cmat(size_t(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      std::vector<Vec> imgs;
      for (int k = 0; k < d; ++k) imgs.push_back(A.mul(A.mul(A.idem[i], unit_vec(d, k)), A.idem[j]));
      Mat M = column_space(F, Mat::from_columns(d, imgs));
      for (int c = 0; c < M.cols; ++c) corner[size_t(i) * r + j].push_back(M.col(c));
      cmat[size_t(i) * r + j] = M;
    }
  auto cdim = [&](int i, int j) { return int(corner[size_t(i) * r + j].size()); };
  auto coords = [&](int i, int j, const Vec& a) {
    const Mat& M = cmat[size_t(i) * r + j];
    if (M.cols == 0) {
      if (!is_zero(a)) throw std::logic_error("bimodule_proj: element outside corner");
      return Vec{};
    }
    Solution s = solve(F, M, a);
    if (!s.consistent) throw std::logic_error("bimodule_proj: element outside corner");
    return s.particular;
  };
  auto outer = [&](const Vec& u, const Vec& v) {
    Vec w;
    for (const auto& a : u)
      for (const auto& b : v) w.push_back(F.mul(a, b));
    return w;
  };

  Semigroup S;
  Category& C = S.C;
  C.field = F;
  int n = r * r;
  auto obj = [&](int i, int j) { return i * r + j; };
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) C.labels.push_back("P" + std::to_string(i + 1) + std::to_string(j + 1));
  C.hd.assign(size_t(n) * n, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int m = 0; m < r; ++m)
        for (int q = 0; q < r; ++q) C.hd[size_t(obj(i, j)) * n + obj(m, q)] = cdim(i, m) * cdim(q, j);
  C.allocate();
  // (u'⊗v') o (u⊗v) = uu' ⊗ v'v
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int m = 0; m < r; ++m)
        for (int q = 0; q < r; ++q)
          for (int s = 0; s < r; ++s)
            for (int t = 0; t < r; ++t) {
              int X = obj(i, j), Y = obj(m, q), Z = obj(s, t);
              int dxy = C.homdim(X, Y);
              auto& cell = C.cmp[(size_t(X) * n + Y) * n + Z];
              for (int a = 0; a < cdim(i, m); ++a)
                for (int b = 0; b < cdim(q, j); ++b)
                  for (int a2 = 0; a2 < cdim(m, s); ++a2)
                    for (int b2 = 0; b2 < cdim(t, q); ++b2) {
                      const Vec& u = corner[size_t(i) * r + m][a];
                      const Vec& v = corner[size_t(q) * r + j][b];
                      const Vec& u2 = corner[size_t(m) * r + s][a2];
                      const Vec& v2 = corner[size_t(t) * r + q][b2];
                      int fi = a * cdim(q, j) + b, gi = a2 * cdim(t, q) + b2;
                      cell[size_t(gi) * dxy + fi] = outer(coords(i, s, A.mul(u, u2)), coords(t, j, A.mul(v2, v)));
                    }
            }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) C.ident[obj(i, j)] = outer(coords(i, i, A.idem[i]), coords(j, j, A.idem[j]));

  // P_ij ⊗ P_kl = ⊕_{w in e_j A e_k} P_il
  S.tens.resize(size_t(n) * n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) S.tens[size_t(obj(i, j)) * n + obj(k, l)] = Obj(cdim(j, k), obj(i, l));
  S.allocate();
  // (u⊗v) ⊠ (u''⊗v''): block w -> w' is [v w u'']_{w'} (u ⊗ v'')
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int m = 0; m < r; ++m)
        for (int q = 0; q < r; ++q)
          for (int k = 0; k < r; ++k)
            for (int l = 0; l < r; ++l)
              for (int p = 0; p < r; ++p)
                for (int s = 0; s < r; ++s) {
                  int X = obj(i, j), X2 = obj(m, q), Y = obj(k, l), Y2 = obj(p, s);
                  auto& cell = S.mt[((size_t(X) * n + X2) * n + Y) * n + Y2];
                  int dyy = C.homdim(Y, Y2);
                  for (int a = 0; a < cdim(i, m); ++a)
                    for (int b = 0; b < cdim(q, j); ++b)
                      for (int a2 = 0; a2 < cdim(k, p); ++a2)
                        for (int b2 = 0; b2 < cdim(s, l); ++b2) {
                          const Vec& u = corner[size_t(i) * r + m][a];
                          const Vec& v = corner[size_t(q) * r + j][b];
                          const Vec& u2 = corner[size_t(k) * r + p][a2];
                          const Vec& v2 = corner[size_t(s) * r + l][b2];
                          Mor M(S.t(X, Y), S.t(X2, Y2));
                          Vec blockv = outer(coords(i, m, u), coords(s, l, v2));
                          for (int w = 0; w < cdim(j, k); ++w) {
                            Vec mid = A.mul(A.mul(v, corner[size_t(j) * r + k][w]), u2);
                            Vec c = coords(q, p, mid);
                            for (int w2 = 0; w2 < cdim(q, p); ++w2) {
                              if (is_zero(c[w2])) continue;
                              Vec bv = blockv;
                              for (auto& e : bv) e = F.mul(e, c[w2]);
                              M.at(w2, w) = bv;
                            }
                          }
                          int fi = a * cdim(q, j) + b, gi = a2 * cdim(s, l) + b2;
                          cell[size_t(fi) * dyy + gi] = M;
                        }
                }
  // ((P_ij P_kl) P_st): index (w, w2) ; (P_ij (P_kl P_st)): index (w2, w)
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l)
          for (int s = 0; s < r; ++s)
            for (int t = 0; t < r; ++t) {
              int X = obj(i, j), Y = obj(k, l), Z = obj(s, t);
              Mor& a = S.assoc[(size_t(X) * n + Y) * n + Z];
              int d1 = cdim(j, k), d2 = cdim(l, s);
              for (int w = 0; w < d1; ++w)
                for (int w2 = 0; w2 < d2; ++w2) a.at(w2 * d1 + w, w * d2 + w2) = C.ident[obj(i, t)];
            }
  finish(S);
  return S;
}

// ---- projectives of a group algebra under the diagonal tensor product -------

Semigroup gen_group_proj(const Field& F, const std::vector<std::vector<int>>& table) {
  int d = int(table.size());
  Algebra A = group_algebra(F, table);
  check_algebra(A);
  std::vector<int> inv(d);
  for (int g = 0; g < d; ++g)
    for (int h = 0; h < d; ++h)
      if (table[g][h] == 0) inv[g] = h;
  Semigroup S;
  Category& C = S.C;
  C.field = F;
  C.labels = {"P"};
  C.hd = {d};
  C.allocate();
  // rho_h o rho_g = rho_{gh}
  for (int g = 0; g < d; ++g)
    for (int h = 0; h < d; ++h) C.cmp[0][size_t(h) * d + g] = unit_vec(d, table[g][h]);
  C.ident[0] = unit_vec(d, 0);
  S.tens = {Obj(d, 0)};
  S.allocate();
  // rho_a ⊠ rho_b : summand h -> a^{-1} h b, block rho_a
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Mor M(Obj(d, 0), Obj(d, 0));
      for (int h = 0; h < d; ++h) M.at(table[table[inv[a]][h]][b], h) = unit_vec(d, a);
      S.mt[0][size_t(a) * d + b] = M;
    }
  // (h, h2) -> (h^{-1} h2, h)
  Mor& as = S.assoc[0];
  for (int h = 0; h < d; ++h)
    for (int h2 = 0; h2 < d; ++h2) as.at(table[inv[h]][h2] * d + h, h * d + h2) = unit_vec(d, 0);
  finish(S);
  return S;
}

Semigroup gen_comm_algebra(const Algebra& A) {
  check_algebra(A);
  if (!A.commutative()) throw std::invalid_argument("comm_algebra: algebra is not commutative");
  int d = A.dim;
  Semigroup S;
  Category& C = S.C;
  C.field = A.field;
  C.labels = {"A"};
  C.hd = {d};
  C.allocate();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) C.cmp[0][size_t(j) * d + i] = A.mult[j][i];
  C.ident[0] = A.one;
  S.tens = {Obj{0}};
  S.allocate();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mor M(Obj{0}, Obj{0});
      if (!is_zero(A.mult[i][j])) M.at(0, 0) = A.mult[i][j];
      S.mt[0][size_t(i) * d + j] = M;
    }
  S.assoc[0].at(0, 0) = A.one;
  S.braid = std::vector<Mor>{one_block(Obj{0}, Obj{0}, 0, 0, A.one)};
  finish(S);
  return S;
}

Semigroup gen_block_sum(const Semigroup& S1, const Semigroup& S2) {
  if (S1.C.field != S2.C.field) throw std::invalid_argument("block_sum: different fields");
  int n1 = S1.n(), n2 = S2.n(), n = n1 + n2;
  auto shift = [](Obj o, int s) {
    for (auto& v : o) v += s;
    return o;
  };
  auto shift_mor = [&](const Mor& m, int s) {
    Mor r = m;
    r.src = shift(m.src, s);
    r.dst = shift(m.dst, s);
    return r;
  };
  auto part = [&](int x) { return x < n1 ? 0 : 1; };
  auto local = [&](int x) { return x < n1 ? x : x - n1; };
  Semigroup S;
  Category& C = S.C;
  C.field = S1.C.field;
  C.labels = S1.C.labels;
  for (const auto& l : S2.C.labels) C.labels.push_back(l + "'");
  C.hd.assign(size_t(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (part(x) == part(y))
        C.hd[size_t(x) * n + y] = (part(x) ? S2.C : S1.C).homdim(local(x), local(y));
  C.allocate();
  for (int x = 0; x < n; ++x) {
    C.ident[x] = (part(x) ? S2.C : S1.C).ident[local(x)];
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (part(x) == part(y) && part(y) == part(z)) {
          const Category& B = part(x) ? S2.C : S1.C;
          C.cmp[(size_t(x) * n + y) * n + z] = B.cmp[(size_t(local(x)) * B.n() + local(y)) * B.n() + local(z)];
        }
  }
  S.tens.assign(size_t(n) * n, Obj{});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (part(x) == part(y)) {
        const Semigroup& B = part(x) ? S2 : S1;
        S.tens[size_t(x) * n + y] = shift(B.t(local(x), local(y)), part(x) ? n1 : 0);
      }
  S.allocate();
  for (int x = 0; x < n; ++x)
    for (int x2 = 0; x2 < n; ++x2)
      for (int y = 0; y < n; ++y)
        for (int y2 = 0; y2 < n; ++y2) {
          int p = part(x);
          if (part(x2) != p || part(y) != p || part(y2) != p) continue;
          const Semigroup& B = p ? S2 : S1;
          int m = B.n();
          const auto& src = B.mt[((size_t(local(x)) * m + local(x2)) * m + local(y)) * m + local(y2)];
          auto& dst = S.mt[((size_t(x) * n + x2) * n + y) * n + y2];
          for (size_t k = 0; k < src.size(); ++k) dst[k] = shift_mor(src[k], p ? n1 : 0);
        }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int p = part(x);
        if (part(y) != p || part(z) != p) continue;
        const Semigroup& B = p ? S2 : S1;
        S.assoc[(size_t(x) * n + y) * n + z] = shift_mor(B.a(local(x), local(y), local(z)), p ? n1 : 0);
      }
  finish(S);
  return S;
}

}  // namespace sgcat
