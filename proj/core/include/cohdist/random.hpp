#pragma once

#include <cstdint>
#include <random>

#include "cohdist/states.hpp"

namespace cohdist {

// Seeded sampling utilities. All draws consume bits from the supplied
// mt19937_64 only through uniform64 -> uniform01 -> Box-Muller, so a fixed
// seed reproduces the same stream on any platform.

double uniform01(std::mt19937_64& rng);
double standard_normal(std::mt19937_64& rng);

// Independent per-task seed derived from a master seed (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

std::vector<cplx> haar_pure_state(std::size_t dim, std::mt19937_64& rng);

// rows x cols (cols <= rows) complex grid with orthonormal columns,
// Haar-distributed; row-major layout.
std::vector<cplx> haar_isometry(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

ComplexMatrix haar_unitary(std::size_t dim, std::mt19937_64& rng);

// Uniform point on the probability simplex (Dirichlet(1,...,1)).
std::vector<double> simplex_weights(std::size_t n, std::mt19937_64& rng);

// Mixture of dim^2 Haar-random pure states with simplex weights.
DensityMatrix random_density_matrix(std::size_t dim, std::mt19937_64& rng);

BipartiteState random_bipartite_state(std::size_t dim_a, std::size_t dim_b, std::mt19937_64& rng);

Ensemble random_ensemble(std::size_t dim, std::size_t size, std::mt19937_64& rng);

}  // namespace cohdist
