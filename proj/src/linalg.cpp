#include "sgcat/linalg.hpp"

#include <stdexcept>

namespace sgcat {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(int rows, const std::vector<Vec>& cols) {
  Mat m(rows, int(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    if (int(cols[j].size()) != rows) throw std::logic_error("from_columns: length mismatch");
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::col(int j) const {
  Vec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(int i) const { return Vec(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols); }

void Mat::set_col(int j, const Vec& v) {
  for (int i = 0; i < rows; ++i) (*this)(i, j) = v[i];
}

Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw std::logic_error("mat_mul: shape mismatch");
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Q& x = A(i, k);
      if (is_zero(x)) continue;
      for (int j = 0; j < B.cols; ++j) {
        const Q& y = B(k, j);
        if (is_zero(y)) continue;
        C(i, j) += x * y;
      }
    }
  if (F.is_prime())
    for (auto& x : C.a) x = F.norm(x);
  return C;
}

Vec mat_vec(const Field& F, const Mat& A, const Vec& v) {
  if (A.cols != int(v.size())) throw std::logic_error("mat_vec: shape mismatch");
  Vec r(A.rows);
  for (int k = 0; k < A.cols; ++k) {
    if (is_zero(v[k])) continue;
    for (int i = 0; i < A.rows; ++i)
      if (!is_zero(A(i, k))) r[i] += A(i, k) * v[k];
  }
  if (F.is_prime())
    for (auto& x : r) x = F.norm(x);
  return r;
}

Mat mat_add(const Field& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw std::logic_error("mat_add: shape mismatch");
  Mat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.add(C.a[i], B.a[i]);
  return C;
}

Mat mat_sub(const Field& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw std::logic_error("mat_sub: shape mismatch");
  Mat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.sub(C.a[i], B.a[i]);
  return C;
}

Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
  return T;
}

bool mat_is_zero(const Mat& A) {
  for (const auto& x : A.a)
    if (!is_zero(x)) return false;
  return true;
}

bool mat_equal(const Mat& A, const Mat& B) { return A.rows == B.rows && A.cols == B.cols && A.a == B.a; }

bool mat_is_identity(const Mat& A) { return A.rows == A.cols && mat_equal(A, Mat::identity(A.rows)); }

Mat hstack(const std::vector<Mat>& parts, int rows) {
  int c = 0;
  for (const auto& p : parts) {
    if (p.rows != rows) throw std::logic_error("hstack: row mismatch");
    c += p.cols;
  }
  Mat m(rows, c);
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < p.cols; ++j) m(i, off + j) = p(i, j);
    off += p.cols;
  }
  return m;
}

Mat vstack(const std::vector<Mat>& parts, int cols) {
  int r = 0;
  for (const auto& p : parts) {
    if (p.cols != cols) throw std::logic_error("vstack: column mismatch");
    r += p.rows;
  }
  Mat m(r, cols);
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.rows; ++i)
      for (int j = 0; j < cols; ++j) m(off + i, j) = p(i, j);
    off += p.rows;
  }
  return m;
}

Echelon rref(const Field& F, Mat A) {
  Echelon E;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int p = -1;
    for (int i = r; i < A.rows; ++i)
      if (!is_zero(A(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < A.cols; ++j) std::swap(A(p, j), A(r, j));
    Q iv = F.inv(A(r, c));
    for (int j = c; j < A.cols; ++j)
      if (!is_zero(A(r, j))) A(r, j) = F.mul(A(r, j), iv);
    for (int i = 0; i < A.rows; ++i) {
      if (i == r || is_zero(A(i, c))) continue;
      Q f = A(i, c);
      for (int j = c; j < A.cols; ++j)
        if (!is_zero(A(r, j))) A(i, j) = F.sub(A(i, j), F.mul(f, A(r, j)));
    }
    E.piv.push_back(c);
    ++r;
  }
  E.R = std::move(A);
  return E;
}

int rank(const Field& F, const Mat& A) {
  if (A.rows <= A.cols) return rref(F, A).rank();
  return rref(F, transpose(A)).rank();
}

Mat kernel(const Field& F, const Mat& A) {
  Echelon E = rref(F, A);
  std::vector<int> is_piv(A.cols, -1);
  for (int r = 0; r < E.rank(); ++r) is_piv[E.piv[r]] = r;
  std::vector<Vec> basis;
  for (int f = 0; f < A.cols; ++f) {
    if (is_piv[f] >= 0) continue;
    Vec v(A.cols);
    v[f] = 1;
    for (int r = 0; r < E.rank(); ++r) v[E.piv[r]] = F.neg(E.R(r, f));
    basis.push_back(std::move(v));
  }
  return Mat::from_columns(A.cols, basis);
}

Solution solve(const Field& F, const Mat& A, const Vec& b) {
  if (int(b.size()) != A.rows) throw std::logic_error("solve: shape mismatch");
  Mat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
    aug(i, A.cols) = b[i];
  }
  Echelon E = rref(F, aug);
  Solution s;
  s.consistent = true;
  for (int r = 0; r < E.rank(); ++r)
    if (E.piv[r] == A.cols) s.consistent = false;
  s.rank = s.consistent ? E.rank() : E.rank() - 1;
  s.kernel = kernel(F, A);
  if (s.consistent) {
    s.particular.assign(A.cols, Q(0));
    for (int r = 0; r < E.rank(); ++r) s.particular[E.piv[r]] = E.R(r, A.cols);
  }
  return s;
}

Cokernel cokernel(const Field& F, const Mat& A) {
  RowSpace rs(F, A.rows);
  for (int j = 0; j < A.cols; ++j) rs.add(A.col(j));
  return rs.quotient();
}

std::optional<Mat> inverse(const Field& F, const Mat& A) {
  if (A.rows != A.cols) return std::nullopt;
  int n = A.rows;
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = 1;
  }
  Echelon E = rref(F, aug);
  if (E.rank() < n || (n > 0 && E.piv[n - 1] != n - 1)) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = E.R(i, n + j);
  return inv;
}

Mat column_space(const Field& F, const Mat& A) {
  Echelon E = rref(F, A);
  std::vector<Vec> cols;
  for (int c : E.piv) cols.push_back(A.col(c));
  return Mat::from_columns(A.rows, cols);
}

RowSpace::RowSpace(const Field& F, int n) : F_(&F), n_(n), where_(n, -1) {}

Vec RowSpace::reduce(Vec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    int c = piv_[r];
    if (is_zero(v[c])) continue;
    Q f = v[c];
    const Vec& row = rows_[r];
    for (int j = 0; j < n_; ++j)
      if (!is_zero(row[j])) v[j] = F_->sub(v[j], F_->mul(f, row[j]));
  }
  return v;
}

bool RowSpace::contains(Vec v) const { return is_zero(reduce(std::move(v))); }

bool RowSpace::add(Vec v) {
  if (int(v.size()) != n_) throw std::logic_error("RowSpace::add: length mismatch");
  v = reduce(std::move(v));
  int c = -1;
  for (int j = 0; j < n_; ++j)
    if (!is_zero(v[j])) {
      c = j;
      break;
    }
  if (c < 0) return false;
  Q iv = F_->inv(v[c]);
  for (auto& x : v)
    if (!is_zero(x)) x = F_->mul(x, iv);
  for (auto& row : rows_) {
    if (is_zero(row[c])) continue;
    Q f = row[c];
    for (int j = 0; j < n_; ++j)
      if (!is_zero(v[j])) row[j] = F_->sub(row[j], F_->mul(f, v[j]));
  }
  where_[c] = int(rows_.size());
  rows_.push_back(std::move(v));
  piv_.push_back(c);
  return true;
}

Cokernel RowSpace::quotient() const {
  std::vector<int> free;
  for (int j = 0; j < n_; ++j)
    if (where_[j] < 0) free.push_back(j);
  int m = int(free.size());
  Cokernel ck;
  ck.rank = dim();
  ck.proj = Mat(m, n_);
  ck.sect = Mat(n_, m);
  for (int k = 0; k < m; ++k) {
    ck.proj(k, free[k]) = 1;
    ck.sect(free[k], k) = 1;
  }
  for (size_t r = 0; r < rows_.size(); ++r) {
    int p = piv_[r];
    for (int k = 0; k < m; ++k) ck.proj(k, p) = F_->neg(rows_[r][free[k]]);
  }
  return ck;
}

}  // namespace sgcat
