#pragma once

#include <cstdint>

#include "cohdist/coherence.hpp"
#include "cohdist/states.hpp"

namespace cohdist {

// A pure-state decomposition of rho written as an isometry acting on the
// scaled eigenbasis: member j is proportional to
// sum_k mixing[j,k] sqrt(lambda_k) |e_k>, with p_j its squared norm. Any
// size-m decomposition of rho arises this way from some m x rank isometry.
struct DecompositionSpec {
  std::size_t rank;               // nonzero eigenvalues of rho (> 1e-12)
  std::size_t size;               // ensemble cardinality m >= rank
  std::vector<cplx> mixing;       // size x rank, row-major, orthonormal columns
};

struct SearchResult {
  double best_value;              // maximized average-coherence excess
  Ensemble best_ensemble;
  std::size_t restarts_used;
  bool converged;                 // the returned candidate's refinement hit the gain threshold
  double upper_bound;             // S(rho) for RelativeEntropy, +infinity for L1
};

// Realize the ensemble a DecompositionSpec describes. Members below
// probability 1e-12 are dropped; the result mixes back to rho within 1e-10.
Ensemble decomposition_from_isometry(const DensityMatrix& rho, const DecompositionSpec& spec);

// Random-restart ascent for the maximal accessible coherence over pure-state
// decompositions. Each restart draws a Haar-random isometry of size
// m = 2*rank and refines it by cyclic sweeps of two-row rotation/phase
// updates, accepting improvements, until the per-sweep gain drops below 1e-8
// or max_iters sweeps have run. Pure states short-circuit to zero. The
// eigen-ensemble is always evaluated as a baseline, so the result never
// falls below it. Deterministic for a fixed seed; restarts use seeds derived
// from the master seed by index, so the best value is nondecreasing in the
// number of restarts.
//
// This is a lower-bound engine: the value reported is the best found, with
// the RelativeEntropy certified bound S(rho) alongside. The returned
// best_value is always recomputed from the returned ensemble.
SearchResult max_accessible_coherence(const DensityMatrix& rho, MeasureKind measure,
                                      std::size_t restarts = 32, std::size_t max_iters = 500,
                                      std::uint64_t seed = 0);

// Certified bound on the accessible coherence: S(rho) for the relative
// entropy measure (concavity of S under dephasing), +infinity for L1.
double accessible_upper_bound(const DensityMatrix& rho, MeasureKind measure);

}  // namespace cohdist
