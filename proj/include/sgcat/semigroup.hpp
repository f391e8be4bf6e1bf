#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgcat/category.hpp"

namespace sgcat {

struct Semigroup {
  Category C;
  std::vector<Obj> tens;              // tens[x*n+y] = x ⊠ y
  std::vector<std::vector<Mor>> mt;   // mt[((x*n+x2)*n+y)*n+y2][i*hd(y,y2)+j] = b_i ⊠ c_j
  std::vector<Mor> assoc;             // assoc[(x*n+y)*n+z] : (x⊠y)⊠z -> x⊠(y⊠z)
  std::vector<Mor> assoc_inv;         // filled by finalize()
  std::optional<std::vector<Mor>> braid;  // braid[x*n+y] : x⊠y -> y⊠x

  int n() const { return C.n(); }
  const Obj& t(int x, int y) const { return tens[size_t(x) * n() + y]; }
  const Mor& mtab(int x, int x2, int y, int y2, int i, int j) const {
    return mt[((size_t(x) * n() + x2) * n() + y) * n() + y2][size_t(i) * C.homdim(y, y2) + j];
  }
  const Mor& a(int x, int y, int z) const { return assoc[(size_t(x) * n() + y) * n() + z]; }
  const Mor& ainv(int x, int y, int z) const { return assoc_inv[(size_t(x) * n() + y) * n() + z]; }

  // computes assoc_inv; throws if some associator block is not invertible
  void finalize();
  // empty tables with the right shapes for the current tens
  void allocate();
};

Obj tensor_obj(const Semigroup& S, const Obj& A, const Obj& B);
Mor tensor_mor(const Semigroup& S, const Mor& f, const Mor& g);
Mor assoc_mor(const Semigroup& S, const Obj& A, const Obj& B, const Obj& C);      // (A⊠B)⊠C -> A⊠(B⊠C)
Mor assoc_inv_mor(const Semigroup& S, const Obj& A, const Obj& B, const Obj& C);  // inverse
Mor braid_mor(const Semigroup& S, const Obj& A, const Obj& B);                   // A⊠B -> B⊠A

// positions of block (i,j) inside tensor_obj(A,B)
std::vector<int> tensor_block(const Semigroup& S, const Obj& A, const Obj& B, int i, int j);

Report validate_semigroup(const Semigroup& S);

// S with reversed tensor product: x ⊠' y = y ⊠ x
Semigroup reverse(const Semigroup& S);

// ---- bracketings ----------------------------------------------------------

struct Tree {
  Obj leaf;
  std::shared_ptr<const Tree> l, r;
  bool is_leaf() const { return !l; }
};
using TreeP = std::shared_ptr<const Tree>;

TreeP L(const Obj& A);
TreeP N(TreeP a, TreeP b);
TreeP lnorm_tree(const std::vector<Obj>& letters);
std::vector<Obj> leaves(const TreeP& t);
Obj tree_obj(const Semigroup& S, const TreeP& t);
Obj lnorm_obj(const Semigroup& S, const std::vector<Obj>& letters);

Mor to_lnorm(const Semigroup& S, const TreeP& t);
Mor from_lnorm(const Semigroup& S, const TreeP& t);
Mor rebracket(const Semigroup& S, const TreeP& from, const TreeP& to);

// A string of letters kept in left-normal bracketing; apply() replaces a
// window of letters by the target of a morphism.
class Chain {
 public:
  Chain(const Semigroup& S, std::vector<Obj> letters);
  Chain(const Semigroup& S, const TreeP& init);
  // m : tree_obj(in) -> tree_obj(out); leaves(in) must equal letters[pos..pos+len)
  void apply(int pos, int len, const Mor& m, const TreeP& in, const TreeP& out);
  const Mor& result() const { return acc_; }
  const std::vector<Obj>& letters() const { return letters_; }

 private:
  const Semigroup* S_;
  std::vector<Obj> letters_;
  Mor acc_;
};

// ---- functors and transformations ----------------------------------------

struct Functor {
  enum class Kind { Id, Left, Right };  // Left(A) = A⊠-, Right(A) = -⊠A
  Kind kind = Kind::Id;
  Obj A;
  static Functor id() { return {}; }
  static Functor left(Obj A) { return {Kind::Left, std::move(A)}; }
  static Functor right(Obj A) { return {Kind::Right, std::move(A)}; }
  Obj obj(const Semigroup& S, const Obj& Y) const;
  Mor mor(const Semigroup& S, const Mor& f) const;
  // positions of G(Y|P) inside G(Y)
  std::vector<int> embed(const Semigroup& S, const Obj& Y, const std::vector<int>& P) const;
  std::string str(const Category& C) const;
};

enum class Flavor { Plain, LeftModule, RightModule };

struct Transform {
  Functor F, G;
  std::vector<Mor> comp;  // comp[x] : F(x) -> G(x)
  Mor at(const Semigroup& S, const Obj& Y) const;
};

// coordinate layout of transformation families F => G
int transform_dim(const Semigroup& S, const Functor& F, const Functor& G);
Transform transform_from(const Semigroup& S, const Functor& F, const Functor& G, const Vec& v, size_t off = 0);
Vec transform_flat(const Semigroup& S, const Transform& t);
Transform transform_combine(const Semigroup& S, const std::vector<Transform>& basis, const Vec& coeff);

// residuals of the naturality and equivariance equations (zero iff satisfied)
Vec transform_residual(const Semigroup& S, Flavor fl, const Transform& t);
// naturality=false: only the equivariance equations
Report check_transform(const Semigroup& S, Flavor fl, const Transform& t, bool naturality = true);

std::vector<Transform> nat_module_space(const Semigroup& S, Flavor fl, const Functor& F, const Functor& G);

}  // namespace sgcat
