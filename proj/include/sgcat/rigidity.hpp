#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgcat/semigroup.hpp"

namespace sgcat {

// (F, F◇, η^l, η^r, ε^l, ε^r) with D = F◇⊠F and E = F⊠F◇:
//   η^l : Id => -⊠D   (left-module)     η^r : Id => D⊠-   (right-module)
//   ε^l : -⊠E => Id   (left-module)     ε^r : E⊠- => Id   (right-module)
struct Adjunction {
  Obj F, Fd;
  Transform eta_l, eta_r, eps_l, eps_r;
};

Functor eta_l_target(const Semigroup& S, const Obj& F, const Obj& Fd);
Functor eta_r_target(const Semigroup& S, const Obj& F, const Obj& Fd);
Functor eps_l_source(const Semigroup& S, const Obj& F, const Obj& Fd);
Functor eps_r_source(const Semigroup& S, const Obj& F, const Obj& Fd);

// all four families zero (the only data available in a zero semigroup category)
Adjunction zero_adjunction(const Semigroup& S, const Obj& F, const Obj& Fd);

struct AdjReport {
  Report I, II, III, IV, naturality, equivariance;
  bool pass() const { return I.pass && II.pass && III.pass && IV.pass && naturality.pass && equivariance.pass; }
};
AdjReport verify_adjunction(const Semigroup& S, const Adjunction& adj);

struct SearchOptions {
  int max_mult = 0;  // 0: maximal multiplicity in the tensor table
  uint64_t seed = 1;
  int random_tries = 32;
};

// basis vectors, then all of k^d when |k^d| <= 256, else seeded random vectors
std::vector<Vec> coefficient_candidates(const Field& F, int d, const SearchOptions& opt);

// unit/counit spaces (naturality, equivariance and Axiom IV imposed)
struct PairSpace {
  std::vector<std::pair<Transform, Transform>> basis;  // (left, right)
};
PairSpace eta_pair_space(const Semigroup& S, const Obj& F, const Obj& Fd);
PairSpace eps_pair_space(const Semigroup& S, const Obj& F, const Obj& Fd);

std::optional<Adjunction> find_adjunction(const Semigroup& S, const Obj& F, const Obj& Fd,
                                          const SearchOptions& opt = {});
// right dual of x: adjunction (x, F◇);  left dual: adjunction (◇x, x)
std::optional<Adjunction> find_dual(const Semigroup& S, int x, const SearchOptions& opt = {});
std::optional<Adjunction> find_left_dual(const Semigroup& S, int x, const SearchOptions& opt = {});
std::vector<Obj> dual_candidates(const Semigroup& S, const Obj& F, bool right, int max_mult);

struct Certificate {
  std::vector<Adjunction> right, left;  // indexed by indecomposable
};
std::optional<Certificate> find_certificate(const Semigroup& S, const SearchOptions& opt = {},
                                            std::string* missing = nullptr);

Adjunction compose_adjunctions(const Semigroup& S, const Adjunction& adjF, const Adjunction& adjG);

// f : A -> B  gives  f◇ : B◇ -> A◇  and  ◇f : ◇B -> ◇A
Obj dual_obj(const Certificate& cert, const Obj& A);
Obj predual_obj(const Certificate& cert, const Obj& A);
Mor dual_mor(const Semigroup& S, const Certificate& cert, const Mor& f);
Mor predual_mor(const Semigroup& S, const Certificate& cert, const Mor& f);
// comparison F◇1 -> F◇2 for two adjunctions with the same F
Mor dual_comparison(const Semigroup& S, const Adjunction& a1, const Adjunction& a2);

// Hom(F⊠H, K) -> Hom(H, F◇⊠K)   and   Hom(H, K⊠F) -> Hom(H⊠F◇, K)
Mat hom_iso_left(const Semigroup& S, const Adjunction& adj, int H, int K);
Mat hom_iso_right(const Semigroup& S, const Adjunction& adj, int H, int K);

int max_tensor_mult(const Semigroup& S);

}  // namespace sgcat
