#pragma once

#include <string>
#include <vector>

#include "sgcat/semigroup.hpp"

namespace sgcat {

// A module category M over S, stored as the semigroup category T on S ⊔ M
// with F⊠X = F⋆X, a_{G,F,X} = m_{G,F;X}, and all other products involving M zero.
// Indecomposables of S are 0..nS-1 in T, those of M follow.
struct ModuleCat {
  int nS = 0;
  Semigroup T;
  int m() const { return T.n() - nS; }
  int idx(int x) const { return nS + x; }
  Obj lift(const Obj& X) const;   // M-local -> T indices
  Obj local(const Obj& X) const;  // T -> M-local
  Category base() const;          // M on its own
  Obj act(int F, int X) const { return local(T.t(F, idx(X))); }
};

// act[F*m+X] = F⋆X; amt[((F*nS+F2)*m+X)*m+X2][i*hd(X,X2)+j] = b_i ⋆ c_j;
// mult[(G*nS+F)*m+X] : (G⊠F)⋆X -> G⋆(F⋆X).  All objects M-local.
// finalize=false skips inverting m (validate_module reports non-invertibility).
ModuleCat make_module(const Semigroup& S, const Category& M, const std::vector<Obj>& act,
                      const std::vector<std::vector<Mor>>& amt, const std::vector<Mor>& mult, bool finalize = true);
ModuleCat regular_module(const Semigroup& S);
// same base M, zero action
ModuleCat zero_module(const Semigroup& S, const Category& M);

Report validate_module(const ModuleCat& Mo);

// F⋆X covers every indecomposable Y of M for some F, X
bool covers_module(const ModuleCat& Mo, int* missing = nullptr);

// component (M F)(f) for f a morphism of M-local objects
Mor act_mor(const ModuleCat& Mo, const Mor& Fm, const Mor& f);

}  // namespace sgcat
