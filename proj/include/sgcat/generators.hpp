#pragma once

#include <string>
#include <vector>

#include "sgcat/semigroup.hpp"

namespace sgcat {

// Finite-dimensional algebra by structure constants: mult[i][j] = a_i a_j.
struct Algebra {
  Field field;
  int dim = 0;
  std::vector<std::vector<Vec>> mult;
  Vec one;
  std::vector<Vec> idem;  // complete set of primitive orthogonal idempotents
  bool commutative() const;
  Vec mul(const Vec& a, const Vec& b) const;
};

Algebra algebra_k(const Field& F);
Algebra algebra_dual_numbers(const Field& F);  // k[x]/(x^2), basis {1, x}
Algebra algebra_k_times_k(const Field& F);     // basis {e1, e2}
// group algebra; table[g][h] = index of gh, element 0 the identity
Algebra group_algebra(const Field& F, const std::vector<std::vector<int>>& table);
std::vector<std::vector<int>> cyclic_group(int n);

// throws std::invalid_argument on non-associative / non-unital data
void check_algebra(const Algebra& A);

// Every generated semigroup is finalized (associator inverses computed).
Semigroup gen_zero(const Field& F);  // two indecomposables X -> Y, all tensor products zero
Semigroup gen_linear_semigroup(const Field& F, const std::vector<std::string>& elements,
                               const std::vector<std::vector<int>>& table);
Semigroup gen_bimodule_proj(const Algebra& A);
Semigroup gen_group_proj(const Field& F, const std::vector<std::vector<int>>& table);
Semigroup gen_comm_algebra(const Algebra& A);  // add{A} with ⊗_A, symmetric
Semigroup gen_block_sum(const Semigroup& S1, const Semigroup& S2);

}  // namespace sgcat
