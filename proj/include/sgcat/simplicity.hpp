#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgcat/modcat.hpp"
#include "sgcat/presheaf.hpp"

namespace sgcat {

struct IdealGen {
  int x, y;  // M-local
  Vec f;     // coordinates in Hom(x, y)
};

// least ideal of M containing gens; stable=true also closes under F⋆(-)
Ideal ideal_closure(const ModuleCat& Mo, const std::vector<IdealGen>& gens, bool stable = true);
// {f in J : all blocks of F⋆f lie in J for every F}
Ideal stable_core_step(const ModuleCat& Mo, const Ideal& J);

struct StabilityReport {
  bool transitive = false;
  int wx = -1, wy = -1;  // Y = wy is not a summand of any F⋆X, X = wx
  bool simple_transitive = false;
  Ideal core;            // largest S-stable ideal inside Rad_M
  int rounds = 0;
  std::string certificate;
};
StabilityReport stability_report(const ModuleCat& Mo);

// simple transitivity by closing the ideal of every Hom basis vector and
// every radical basis vector separately
bool simple_transitive_oracle(const ModuleCat& Mo, std::string* witness = nullptr);

struct TensorVerdict {
  bool yes = false;
  StabilityReport left, right;
  UnitReport unit;
  std::vector<int> unit_dims;
  bool consistent = false;
  std::string evidence;
};
TensorVerdict decide_finite_tensor(const Semigroup& S, const Certificate& cert, uint64_t seed = 1);

struct TraceResult {
  int dim = 0;
  Mat sect;  // columns: representatives in ⊕ End(X)
  Mat proj;
  std::vector<int> offset;                // offset of End(X) in ⊕ End(X)
  std::optional<std::vector<Vec>> mult;   // mult[i*dim+j] = class of [f_i ⊠ f_j]
};
TraceResult trace_k(const Category& C);
TraceResult trace_k(const Semigroup& S, bool with_multiplication);

// coequalizer of ⊕ Y((F◇⊠G)⊠(G◇⊠F)) ⇒ ⊕ Y(H◇⊠H); throws without a braiding
Quotient enriched_trace(const Semigroup& S, const Certificate& cert);

}  // namespace sgcat
