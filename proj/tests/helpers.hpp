#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "cohdist/eig.hpp"
#include "cohdist/random.hpp"
#include "cohdist/states.hpp"

namespace testutil {

using cohdist::cplx;

inline bool approx(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

// 0.5 * ||rho - sigma||_1
inline double trace_distance(const cohdist::ComplexMatrix& a, const cohdist::ComplexMatrix& b) {
  return 0.5 * cohdist::trace_norm(a - b);
}

inline cohdist::ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  cohdist::ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = cohdist::standard_normal(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      const cplx v(cohdist::standard_normal(rng), cohdist::standard_normal(rng));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return m;
}

// sum_i p_i rho^A_i (x) |i><i| with the supplied A-side blocks.
inline cohdist::BipartiteState quantum_incoherent_state(
    const std::vector<double>& probs, const std::vector<cohdist::DensityMatrix>& blocks) {
  const std::size_t da = blocks.front().dim();
  const std::size_t db = probs.size();
  cohdist::ComplexMatrix m(da * db);
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j)
        m(i * db + k, j * db + k) = probs[k] * blocks[k].mat()(i, j);
  return cohdist::BipartiteState(cohdist::DensityMatrix(m), da, db);
}

inline bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace testutil
