#pragma once

#include "cohdist/coherence.hpp"
#include "cohdist/states.hpp"

namespace cohdist {

// Basis-dependent quantities: every measurement below is a projective
// measurement in the fixed reference basis, never optimized over bases.
// All values in bits.

// I_AB = S_A + S_B - S_AB
double mutual_information(const BipartiteState& rho);

// Mutual-information loss under a reference-basis measurement on one or both
// sides: OnB gives D<- = S_B - S_AB - S_B~ + S_AB~, OnA and Both analogous.
double discord(const BipartiteState& rho, MeasurementSide side);

enum class CorrelationSide {
  Left,  // I_{AB~}: measure B, Holevo quantity of A's conditional ensemble
  Both,  // I_{~A~B}: additionally dephase A
};

// Ensemble form of the classical correlations: Left is
// S_A - sum p_i S(rho_{A_i}), Both replaces each state by its dephasing.
double classical_correlation(const BipartiteState& rho, CorrelationSide side);

// chi = S(mixture) - sum p_i S(rho_i)
double holevo(const Ensemble& ensemble);

// chi' = S(dephase(mixture)) - sum p_i S(dephase(rho_i))
double dephased_holevo(const Ensemble& ensemble);

// All six correlation quantities from a single pass over the four dephasings
// of the joint state.
struct DiscordReport {
  double mutual_info;
  double discord_left;     // D<-, measurement on B
  double discord_right;    // D->, measurement on A
  double discord_both;     // D<->
  double classical_left;   // I_{AB~}
  double classical_both;   // I_{~A~B}
};

DiscordReport discord_report(const BipartiteState& rho);

}  // namespace cohdist
