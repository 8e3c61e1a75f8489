#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cohdist/eig.hpp"
#include "cohdist/matrix.hpp"

namespace cohdist {

enum class Subsystem { A, B };
enum class DephaseSide { A, B, AB };

// A validated quantum state: Hermitian within 1e-9, unit trace within 1e-9,
// minimum eigenvalue >= -1e-9. The stored matrix is symmetrized after the
// checks, so downstream math sees exactly Hermitian data.
class DensityMatrix {
public:
  explicit DensityMatrix(const ComplexMatrix& m);

  // |psi><psi| for a nonzero vector; psi is normalized first.
  static DensityMatrix pure(const std::vector<cplx>& psi);

  const ComplexMatrix& mat() const { return m_; }
  std::size_t dim() const { return m_.dim(); }

private:
  ComplexMatrix m_;
};

// Density matrix on A (x) B with the entry convention rho_{ik,jl} stored at
// row i*dimB + k, column j*dimB + l (i,j index A; k,l index B).
class BipartiteState {
public:
  BipartiteState(DensityMatrix state, std::size_t dim_a, std::size_t dim_b);

  const DensityMatrix& state() const { return state_; }
  const ComplexMatrix& mat() const { return state_.mat(); }
  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }

  cplx entry(std::size_t i, std::size_t k, std::size_t j, std::size_t l) const {
    return state_.mat()(i * dim_b_ + k, j * dim_b_ + l);
  }

private:
  DensityMatrix state_;
  std::size_t dim_a_;
  std::size_t dim_b_;
};

// Probability-weighted list of same-dimension states with the mixture
// sum p_i rho_i cached at construction.
class Ensemble {
public:
  using Member = std::pair<double, DensityMatrix>;

  explicit Ensemble(std::vector<Member> members);

  const std::vector<Member>& members() const { return members_; }
  const DensityMatrix& mixture() const { return mixture_; }
  std::size_t size() const { return members_.size(); }

private:
  std::vector<Member> members_;
  DensityMatrix mixture_;
};

// Pi(rho): delete all off-diagonal entries in the reference basis.
DensityMatrix dephase(const DensityMatrix& rho);

// Local dephasing: side A zeroes entries with i != j, side B those with
// k != l, side AB both (fully diagonal in the product basis).
BipartiteState dephase_side(const BipartiteState& rho, DephaseSide side);

DensityMatrix partial_trace(const BipartiteState& rho, Subsystem keep);

// Reference-basis projective measurement on one subsystem: outcome k of
// measuring B occurs with p_k = sum_i rho_{ik,ik} and leaves A in
// rho_{A_k} = sum_ij rho_{ik,jk}/p_k |i><j|. Outcomes below 1e-12 are
// dropped. The mixture equals the kept marginal.
Ensemble conditional_ensemble(const BipartiteState& rho, Subsystem measured);

// State supported on doubled indices: rho_{ii,jj} = c(i,j), zero elsewhere.
// The coefficient grid must itself be a valid density matrix.
BipartiteState schmidt_correlated(const ComplexMatrix& coefficients);

// Ground state of H = lambda XX + J(XI + IX) + epsilon*lambda (ZI + IZ) as a
// pure 2x2-bipartite projector. Degenerate ground spaces resolve to the
// eigenvector with the lowest index under the deterministic eigh ordering.
BipartiteState ising_ground_state(double coupling_j, double lambda, double epsilon);

// 1/2 |+><+| (x) |0><0| + 1/2 |-><-| (x) |1><1|
BipartiteState intro_example_state();

// (|00> + |11>)/sqrt(2)
BipartiteState bell_state();

// |+>|+> product state
BipartiteState product_plus_state();

// ||rho^{T_B}||_1 - 1
double negativity(const BipartiteState& rho);

// Transpose the indices of one side: T_B swaps k <-> l in rho_{ik,jl}.
ComplexMatrix partial_transpose(const BipartiteState& rho, Subsystem side);

}  // namespace cohdist
