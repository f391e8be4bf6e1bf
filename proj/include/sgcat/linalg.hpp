#pragma once

#include <optional>
#include <vector>

#include "sgcat/field.hpp"

namespace sgcat {

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Q> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

  Q& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  const Q& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

  static Mat identity(int n);
  static Mat from_columns(int rows, const std::vector<Vec>& cols);
  Vec col(int j) const;
  Vec row(int i) const;
  void set_col(int j, const Vec& v);
};

Mat mat_mul(const Field& F, const Mat& A, const Mat& B);
Vec mat_vec(const Field& F, const Mat& A, const Vec& v);
Mat mat_add(const Field& F, const Mat& A, const Mat& B);
Mat mat_sub(const Field& F, const Mat& A, const Mat& B);
Mat transpose(const Mat& A);
bool mat_is_zero(const Mat& A);
bool mat_equal(const Mat& A, const Mat& B);
bool mat_is_identity(const Mat& A);
Mat hstack(const std::vector<Mat>& parts, int rows);
Mat vstack(const std::vector<Mat>& parts, int cols);

struct Echelon {
  Mat R;                // reduced row echelon form
  std::vector<int> piv; // pivot column of row r
  int rank() const { return int(piv.size()); }
};
Echelon rref(const Field& F, Mat A);
int rank(const Field& F, const Mat& A);

// columns form a basis of {x : A x = 0}
Mat kernel(const Field& F, const Mat& A);

struct Solution {
  bool consistent = false;
  Vec particular;
  Mat kernel;
  int rank = 0;
};
// A x = b
Solution solve(const Field& F, const Mat& A, const Vec& b);

// proj : (rows - rank) x rows with proj * A = 0, sect with proj * sect = 1
struct Cokernel {
  Mat proj, sect;
  int rank = 0;
};
Cokernel cokernel(const Field& F, const Mat& A);

std::optional<Mat> inverse(const Field& F, const Mat& A);

// basis (columns) of the column space
Mat column_space(const Field& F, const Mat& A);

// Incrementally reduced row space inside F^n.  Rows are kept fully reduced so
// that the quotient F^n / span is read off the non-pivot columns.
class RowSpace {
 public:
  RowSpace(const Field& F, int n);
  bool add(Vec v);  // true when v was not already in the span
  bool contains(Vec v) const;
  Vec reduce(Vec v) const;
  int dim() const { return int(rows_.size()); }
  int n() const { return n_; }
  // coordinates on the quotient: proj is (n-dim) x n, sect n x (n-dim)
  Cokernel quotient() const;
  std::vector<Vec> basis() const { return rows_; }

 private:
  const Field* F_;
  int n_;
  std::vector<Vec> rows_;
  std::vector<int> piv_;
  std::vector<int> where_;  // column -> row index or -1
};

// Matrix of a linear map given as a function Vec -> Vec (evaluated on unit vectors).
template <class Fn>
Mat linear_map_matrix(int nvars, Fn fn) {
  std::vector<Vec> cols;
  int rows = -1;
  for (int i = 0; i < nvars; ++i) {
    Vec e(nvars);
    e[i] = 1;
    cols.push_back(fn(e));
    if (rows < 0) rows = int(cols.back().size());
  }
  if (rows < 0) rows = int(fn(Vec()).size());
  return Mat::from_columns(rows, cols);
}

// fn(x) = A x + b; returns (A, b)
template <class Fn>
std::pair<Mat, Vec> affine_system(const Field& F, int nvars, Fn fn) {
  Vec b = fn(Vec(nvars));
  std::vector<Vec> cols;
  for (int i = 0; i < nvars; ++i) {
    Vec e(nvars);
    e[i] = 1;
    Vec c = fn(e);
    for (size_t k = 0; k < c.size(); ++k) c[k] = F.sub(c[k], b[k]);
    cols.push_back(std::move(c));
  }
  return {Mat::from_columns(int(b.size()), cols), b};
}

}  // namespace sgcat
