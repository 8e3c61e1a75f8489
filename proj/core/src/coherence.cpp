#include "cohdist/coherence.hpp"

#include <cmath>

namespace cohdist {

DephaseSide dephase_side_of(MeasurementSide side) {
  switch (side) {
    case MeasurementSide::OnA: return DephaseSide::A;
    case MeasurementSide::OnB: return DephaseSide::B;
    case MeasurementSide::Both: break;
  }
  return DephaseSide::AB;
}

double l1_coherence(const DensityMatrix& rho) {
  double s = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j)
      if (i != j) s += std::abs(rho.mat()(i, j));
  return s;
}

double rel_ent_coherence(const DensityMatrix& rho) {
  return von_neumann_entropy(dephase(rho)) - von_neumann_entropy(rho);
}

double coherence(const DensityMatrix& rho, MeasureKind measure) {
  return measure == MeasureKind::L1 ? l1_coherence(rho) : rel_ent_coherence(rho);
}

double bipartite_rel_coherence(const BipartiteState& rho, MeasurementSide side) {
  const BipartiteState dephased = dephase_side(rho, dephase_side_of(side));
  return von_neumann_entropy(dephased.state()) - von_neumann_entropy(rho.state());
}

}  // namespace cohdist
