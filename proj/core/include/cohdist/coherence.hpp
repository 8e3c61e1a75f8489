#pragma once

#include "cohdist/entropy.hpp"
#include "cohdist/states.hpp"

namespace cohdist {

enum class MeasureKind { L1, RelativeEntropy };

// Which subsystem a reference-basis measurement acts on: OnA (->), OnB (<-),
// Both (<->).
enum class MeasurementSide { OnA, OnB, Both };

DephaseSide dephase_side_of(MeasurementSide side);

// sum_{i != j} |rho_ij|
double l1_coherence(const DensityMatrix& rho);

// S(dephase(rho)) - S(rho), in bits
double rel_ent_coherence(const DensityMatrix& rho);

double coherence(const DensityMatrix& rho, MeasureKind measure);

// Entropy cost of dephasing one or both sides: S(dephased) - S(rho). With
// side Both this coincides with rel_ent_coherence of the joint matrix, since
// the reference basis is the product basis.
double bipartite_rel_coherence(const BipartiteState& rho, MeasurementSide side);

}  // namespace cohdist
