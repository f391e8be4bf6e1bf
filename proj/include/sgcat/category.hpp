#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgcat/linalg.hpp"

namespace sgcat {

// A formal object: ordered list of indecomposable indices.  Equality of
// formal objects in the mathematical sense is multiset equality.
using Obj = std::vector<int>;

bool same_multiset(Obj a, Obj b);
Obj concat(const Obj& a, const Obj& b);

// Finitary k-linear category presented on its indecomposables.
struct Category {
  Field field;
  std::vector<std::string> labels;
  std::vector<int> hd;               // hd[x*n+y] = dim Hom(x,y)
  std::vector<std::vector<Vec>> cmp; // cmp[(x*n+y)*n+z][j*hd(x,y)+i] = b_j o b_i
  std::vector<Vec> ident;            // coordinates of id_x

  int n() const { return int(labels.size()); }
  int homdim(int x, int y) const { return hd[size_t(x) * n() + y]; }
  const Vec& cst(int x, int y, int z, int i, int j) const {
    return cmp[(size_t(x) * n() + y) * n() + z][size_t(j) * homdim(x, y) + i];
  }
  int index_of(const std::string& label) const;  // -1 if absent
  std::string obj_str(const Obj& A) const;

  // allocate empty tables for the current labels / hd
  void allocate();
};

Vec compose_vec(const Category& C, int x, int y, int z, const Vec& g, const Vec& f);

// Morphism between formal objects: blocks[r*src.size()+c] in Hom(src[c], dst[r]).
// An empty block vector stands for zero.
struct Mor {
  Obj src, dst;
  std::vector<Vec> blk;

  Mor() = default;
  Mor(Obj s, Obj d) : src(std::move(s)), dst(std::move(d)), blk(src.size() * dst.size()) {}
  Vec& at(size_t r, size_t c) { return blk[r * src.size() + c]; }
  const Vec& at(size_t r, size_t c) const { return blk[r * src.size() + c]; }
};

Mor zero_mor(const Obj& src, const Obj& dst);
Mor id_mor(const Category& C, const Obj& A);
Mor basis_mor(const Category& C, int x, int y, int i);
Mor compose(const Category& C, const Mor& g, const Mor& f);
Mor compose_all(const Category& C, const std::vector<Mor>& chain);  // chain[0] o chain[1] o ...
Mor mor_add(const Category& C, const Mor& a, const Mor& b);
Mor mor_sub(const Category& C, const Mor& a, const Mor& b);
Mor mor_scale(const Category& C, const Q& s, const Mor& a);
bool mor_is_zero(const Mor& a);
bool mor_equal(const Category& C, const Mor& a, const Mor& b);
// block (r,c) of a morphism, zero-filled
Vec block(const Category& C, const Mor& m, size_t r, size_t c);

// flat coordinates
int mor_dim(const Category& C, const Obj& src, const Obj& dst);
Vec flatten(const Category& C, const Mor& m);
Mor unflatten(const Category& C, const Obj& src, const Obj& dst, const Vec& v, size_t off = 0);

// place a morphism m into a bigger one at the given row / column positions
void place(Mor& big, const Mor& m, const std::vector<int>& rows, const std::vector<int>& cols);
Mor submor(const Mor& m, const std::vector<int>& rows, const std::vector<int>& cols);
std::optional<Mor> mor_inverse(const Category& C, const Mor& f);

struct Report {
  bool pass = true;
  std::vector<std::string> failures;  // first few witnesses
  int checked = 0;
  void fail(const std::string& w, size_t keep = 10) {
    pass = false;
    if (failures.size() < keep) failures.push_back(w);
  }
};

// structural sanity (table sizes); throws std::invalid_argument naming the cell
void check_shapes(const Category& C);
Report validate_presentation(const Category& C);

// dim End(x)/Rad End(x) = 1 for each x
Report local_end_check(const Category& C);

// Ideal: for every ordered pair a basis (columns) of I(x,y) inside Hom(x,y)
struct Ideal {
  std::vector<Mat> sub;  // index x*n+y, shape hd(x,y) x dim
  int dim(const Category& C, int x, int y) const { return sub[size_t(x) * C.n() + y].cols; }
  int total() const;
};
Ideal zero_ideal(const Category& C);
Ideal full_ideal(const Category& C);
bool ideal_contains(const Category& C, const Ideal& I, int x, int y, const Vec& v);
bool ideal_is_closed(const Category& C, const Ideal& I);  // two-sided composition closure
bool ideal_equal(const Ideal& a, const Ideal& b);

// Jacobson radical of one algebra End(x); throws RadicalUnavailable
struct RadicalUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
Mat end_radical(const Category& C, int x);
Ideal radical(const Category& C);

enum class SplitDir { Epi, Mono };
std::optional<Mor> split_test(const Category& C, const Mor& f, SplitDir dir);

Category opposite(const Category& C);

}  // namespace sgcat
