#pragma once

#include <string>
#include <vector>

#include "sgcat/modcat.hpp"
#include "sgcat/presheaf.hpp"

namespace sgcat {

enum class RealStatus { Found, Refuted, Undecided };
std::string real_status_str(RealStatus s);

// All transformations live on the S ⊔ M semigroup Mo.T; components at S objects are zero.
//   η̂, η : Id => (F◇⊠F)⋆-      ε̂, ε : (F⊠F◇)⋆- => Id
struct Realization {
  RealStatus status = RealStatus::Undecided;
  std::string reason;
  Transform eta_hat, eps_hat;  // any pair satisfying the triangle identities
  Transform eta, eps;          // the coherent pair built from (η̂, ε̂) and the adjunction in S
  Report hat_triangles, triangles, coherence, naturality;
  bool pass() const {
    return status == RealStatus::Found && hat_triangles.pass && triangles.pass && coherence.pass && naturality.pass;
  }
};

Realization adjunction_realization(const ModuleCat& Mo, const Adjunction& adj, const SearchOptions& opt = {});

// triangle identities of (η, ε) on every indecomposable of M
Report module_triangles(const ModuleCat& Mo, const Adjunction& adj, const Transform& eta, const Transform& eps);
// M H ε_X = M(ε^l_H)_X  and  M H η_X = M(η^l_H)_X
Report coherence_check(const ModuleCat& Mo, const Adjunction& adj, const Transform& eta, const Transform& eps);

// presheaves on M pushed to S ⊔ M by zero and back
Presheaf extend_presheaf(const Category& big, const Presheaf& P, int offset);
Presheaf restrict_presheaf(const Category& small, const Presheaf& P, int offset);

struct LiftReport {
  bool pass = false;
  std::string precondition;  // empty when all preconditions hold
  std::vector<Realization> realizations;
  Report theta;      // per X: θ well defined, natural, invertible, θσ = id, σθ = id
  Report roundtrip;  // Y(F⋆X) ≅ Y(F)⋆Y(X), representables projective with themselves as covers
  std::string note;
};
LiftReport unital_lift_check(const Semigroup& S, const ModuleCat& Mo, const Certificate& cert,
                             const SearchOptions& opt = {});

struct ProjReport {
  bool projectivizing = true;
  std::string witness;
  int checked = 0;
};
// F⋆X projective for every indecomposable F and every simple or indecomposable projective X
ProjReport projectivizing_check(const Semigroup& S, const ModuleCat& Mo);

// one-object semigroup {*} (* ⊠ * = *) acting on add{A, k}, A = k[x]/x², by the
// semisimplification A ↦ k ⊕ k, k ↦ k
ModuleCat semisimplification_module(const Field& F);

}  // namespace sgcat
