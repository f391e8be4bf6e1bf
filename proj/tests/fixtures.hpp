#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sgcat/generators.hpp"

namespace fx {

inline sgcat::Field Q() { return sgcat::Field::rationals(); }
inline sgcat::Field GF2() { return sgcat::Field::prime(2); }

inline sgcat::Semigroup bk() { return sgcat::gen_bimodule_proj(sgcat::algebra_k(Q())); }
inline sgcat::Semigroup bdual() { return sgcat::gen_bimodule_proj(sgcat::algebra_dual_numbers(Q())); }
inline sgcat::Semigroup bkk() { return sgcat::gen_bimodule_proj(sgcat::algebra_k_times_k(Q())); }
inline sgcat::Semigroup gz2() { return sgcat::gen_group_proj(GF2(), sgcat::cyclic_group(2)); }
inline sgcat::Semigroup gz3() { return sgcat::gen_group_proj(sgcat::Field::prime(3), sgcat::cyclic_group(3)); }
inline sgcat::Semigroup lin() { return sgcat::gen_linear_semigroup(Q(), {"y", "0"}, {{0, 1}, {1, 1}}); }
inline sgcat::Semigroup zero() { return sgcat::gen_zero(Q()); }
inline sgcat::Semigroup comm() { return sgcat::gen_comm_algebra(sgcat::algebra_dual_numbers(Q())); }

// rigid fixtures
inline std::vector<std::pair<std::string, sgcat::Semigroup>> rigid() {
  return {{"bimod(k)", bk()}, {"bimod(k[x]/x2)", bdual()}, {"bimod(kxk)", bkk()}, {"group(Z2,GF2)", gz2()},
          {"group(Z3,GF3)", gz3()}, {"comm(k[x]/x2)", comm()}};
}

}  // namespace fx
