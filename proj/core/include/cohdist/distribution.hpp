#pragma once

#include "cohdist/coherence.hpp"
#include "cohdist/states.hpp"

namespace cohdist {

// How the bipartite coherence C_AB splits into local coherence of each
// marginal, locally accessible coherence of each side, and the remaining
// (not locally accessible) part:
//
//   C_AB = C_A + C^A_A + C_B + C^A_B + C^T + residual
//
// The residual is reported rather than assumed zero; it doubles as an
// end-to-end numerical health check.
struct DistributionReport {
  MeasureKind measure;
  double c_total;    // C_AB
  double c_a;        // C(rho_A)
  double c_b;        // C(rho_B)
  double acc_a;      // C^A_A, locally accessible on A
  double acc_b;      // C^A_B
  double remaining;  // C^T
  double residual;   // c_total - (c_a + acc_a + c_b + acc_b + remaining)
};

// sum p_i C(rho_i) - C(mixture); nonnegative by convexity of both measures.
double ensemble_accessible_coherence(const Ensemble& ensemble, MeasureKind measure);

// Closed form of the coherence side A (or B) gains on average when the other
// side is measured in the reference basis and the outcome communicated.
// Coincides with ensemble_accessible_coherence of the conditional ensemble.
double local_accessible_coherence(const BipartiteState& rho, Subsystem side, MeasureKind measure);

// The part of C_AB that no local measurement plus one-way communication can
// recover. L1: sum of |rho_{ik,jl}| with i != j and k != l. Relative
// entropy: S_AB~ + S_~AB - S_AB - S_~A~B. Nonnegative for both measures.
double remaining_coherence(const BipartiteState& rho, MeasureKind measure);

// Full ledger. Throws PartitionViolationError when |residual| > 1e-7,
// which signals an internal numerical fault, not a physics outcome.
DistributionReport distribution_report(const BipartiteState& rho, MeasureKind measure);

}  // namespace cohdist
