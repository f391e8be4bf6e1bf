#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgcat/rigidity.hpp"

namespace sgcat {

// Finite-dimensional functor C^op -> vec.  For the i-th basis morphism
// b : x -> y, act[x*n+y][i] is the matrix of P(b) : P(y) -> P(x).
struct Presheaf {
  std::vector<int> dim;
  std::vector<std::vector<Mat>> act;
  const Mat& at(int n, int x, int y, int i) const { return act[size_t(x) * n + y][i]; }
  int total() const;
};

// comp[x] : P(x) -> Q(x)
struct PMap {
  std::vector<Mat> comp;
};

Presheaf zero_presheaf(const Category& C);
Report check_presheaf(const Category& C, const Presheaf& P);
Report check_pmap(const Category& C, const Presheaf& P, const Presheaf& Q, const PMap& f);
// P(f) for f given by coordinates in Hom(x,y)
Mat act_vec(const Category& C, const Presheaf& P, int x, int y, const Vec& f);

// Y(A)(x) = Hom(x, A), basis ordered (summand j of A, Hom basis)
Presheaf representable(const Category& C, const Obj& A);
// Y(f) : Y(A) -> Y(B)
PMap yoneda_map(const Category& C, const Mor& f);
// element of Y(A)(x) as a morphism x -> A and back
Mor element_mor(const Category& C, const Obj& A, int x, const Vec& v);

PMap pmap_compose(const Category& C, const PMap& g, const PMap& f);
PMap pmap_identity(const Presheaf& P);
PMap pmap_sub(const Category& C, const PMap& a, const PMap& b);
bool pmap_is_zero(const PMap& f);
bool pmap_equal(const PMap& a, const PMap& b);

struct Quotient {
  Presheaf P;
  std::vector<Mat> proj, sect;  // proj[x] : Q(x) -> P(x), sect[x] : P(x) -> Q(x)
};
// cokernel of a family of maps into Q given by images (columns) at each object; must be a sub-presheaf
Quotient quotient(const Category& C, const Presheaf& Q, const std::vector<Mat>& sub);
Quotient cokernel(const Category& C, const Presheaf& Q, const PMap& f);

// basis of Nat(P, Q)
std::vector<PMap> hom_space(const Category& C, const Presheaf& P, const Presheaf& Q);
Vec pmap_flat(const PMap& f);
PMap pmap_from(const Presheaf& P, const Presheaf& Q, const Vec& v);

enum class IsoStatus { Iso, NotIso, Undecided };
struct IsoResult {
  IsoStatus status = IsoStatus::Undecided;
  std::string reason;
  PMap map, inverse;
};
IsoResult presheaf_iso(const Category& C, const Presheaf& P, const Presheaf& Q, uint64_t seed = 1);
std::string iso_status_str(IsoStatus s);

// ---- Day convolution ------------------------------------------------------------

struct DayResult {
  Presheaf R;
  std::vector<int> gdim;               // generator dimension at each Z
  std::vector<std::vector<int>> goff;  // goff[Z][H*n+K] offset of the (H,K) generator block
  std::vector<Mat> proj, sect;         // generators -> R and back
};
DayResult day_convolve(const Semigroup& S, const Presheaf& P, const Presheaf& Q);
// induced map P⊛Q -> P'⊛Q'
PMap day_map(const Semigroup& S, const DayResult& from, const DayResult& to, const Presheaf& P, const Presheaf& Q,
             const PMap& a, const PMap& b);

// ---- units --------------------------------------------------------------------------

enum class Side { Left, Right };

struct Ansatz {
  Side side;
  Presheaf P;
  std::vector<std::vector<Transform>> basis;  // basis[F]
};
// right: U(F) = Nat_{Mod-S}(F⊠-, Id);  left: U(F) = Nat_{S-Mod}(-⊠F, Id)
Ansatz unit_ansatz(const Semigroup& S, Side side, const Certificate* cert);
Vec ansatz_coords(const Semigroup& S, const Ansatz& A, int F, const Transform& t);

struct AnsatzIso {
  PMap Psi, Phi;  // right -> left, left -> right
  Report report;  // naturality and both composites
};
AnsatzIso ansatz_iso(const Semigroup& S, const Certificate& cert, const Ansatz& right, const Ansatz& left);

struct Liberal {
  bool liberal = false;
  std::vector<int> witness;  // witness[Y] = G with Y a summand of F⊠G, or -1
};
Liberal is_liberal(const Semigroup& S, int F);

Quotient unit_bar(const Semigroup& S, int F, const Certificate* cert);
Quotient unit_general(const Semigroup& S, const Certificate* cert);

struct UnitReport {
  bool unital = false;
  Report left, right;  // per H: θ well defined, natural, θσ = id, σθ = id
  int end_dim = 0;
  bool simple = false;
  std::string note;
};
UnitReport unit_verify(const Semigroup& S, const Presheaf& U, const Certificate& cert, uint64_t seed = 1);

// ---- covers -------------------------------------------------------------------------

struct CoverFlags {
  Obj cover;          // cover = Y(cover)
  PMap epi;           // Y(cover) -> P
  std::vector<int> top;
  bool projective = false;
  bool injective = false;
  std::optional<PMap> splitting;
};
std::vector<int> top_dims(const Category& C, const Presheaf& P);
CoverFlags cover_and_flags(const Category& C, const Presheaf& P);
bool is_projective(const Category& C, const Presheaf& P);
Presheaf dual_presheaf(const Category& C, const Presheaf& P);  // presheaf on C^op

// Rad·P as subspaces (columns) of P(x)
std::vector<Mat> radical_submodule(const Category& C, const Presheaf& P);

}  // namespace sgcat
