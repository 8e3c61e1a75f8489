#pragma once

#include "cohdist/entropy.hpp"
#include "cohdist/states.hpp"

namespace cohdist::detail {

// The eight entropies every discord / distribution formula draws on,
// computed in one pass so identities telescope instead of accumulating
// independent rounding. Tilde marks a dephased side.
struct DephasedEntropies {
  double s_ab;    // S(rho_AB)
  double s_abt;   // S(rho_{A~B}), B dephased
  double s_atb;   // S(rho_{~AB}), A dephased
  double s_atbt;  // S(rho_{~A~B}), both dephased
  double s_a;     // S(rho_A)
  double s_b;     // S(rho_B)
  double s_at;    // S(dephase(rho_A))
  double s_bt;    // S(dephase(rho_B))
};

inline DephasedEntropies dephased_entropies(const BipartiteState& rho) {
  const DensityMatrix rho_a = partial_trace(rho, Subsystem::A);
  const DensityMatrix rho_b = partial_trace(rho, Subsystem::B);
  return DephasedEntropies{
      .s_ab = von_neumann_entropy(rho.state()),
      .s_abt = von_neumann_entropy(dephase_side(rho, DephaseSide::B).state()),
      .s_atb = von_neumann_entropy(dephase_side(rho, DephaseSide::A).state()),
      .s_atbt = von_neumann_entropy(dephase_side(rho, DephaseSide::AB).state()),
      .s_a = von_neumann_entropy(rho_a),
      .s_b = von_neumann_entropy(rho_b),
      .s_at = von_neumann_entropy(dephase(rho_a)),
      .s_bt = von_neumann_entropy(dephase(rho_b)),
  };
}

}  // namespace cohdist::detail
