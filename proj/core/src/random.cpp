#include "cohdist/random.hpp"

#include <cmath>
#include <numbers>

#include "cohdist/errors.hpp"

namespace cohdist {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& rng) {
  // Box-Muller; one sample per call keeps the stream position predictable.
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<cplx> haar_pure_state(std::size_t dim, std::mt19937_64& rng) {
  std::vector<cplx> v(dim);
  double n2 = 0.0;
  while (n2 <= 1e-30) {
    for (auto& c : v) c = cplx(standard_normal(rng), standard_normal(rng));
    n2 = 0.0;
    for (const auto& c : v) n2 += std::norm(c);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : v) c *= inv;
  return v;
}

std::vector<cplx> haar_isometry(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  if (cols > rows) throw InvalidParameterError("haar_isometry: cols must not exceed rows");
  std::vector<cplx> m(rows * cols);
  for (auto& c : m) c = cplx(standard_normal(rng), standard_normal(rng));

  // Modified Gram-Schmidt on columns, with one re-orthogonalization pass.
  for (std::size_t c = 0; c < cols; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < c; ++p) {
        cplx dot = 0.0;
        for (std::size_t r = 0; r < rows; ++r) dot += std::conj(m[r * cols + p]) * m[r * cols + c];
        for (std::size_t r = 0; r < rows; ++r) m[r * cols + c] -= dot * m[r * cols + p];
      }
    }
    double n2 = 0.0;
    for (std::size_t r = 0; r < rows; ++r) n2 += std::norm(m[r * cols + c]);
    if (n2 <= 1e-24) {
      // Degenerate draw; replace the column and redo it.
      for (std::size_t r = 0; r < rows; ++r)
        m[r * cols + c] = cplx(standard_normal(rng), standard_normal(rng));
      --c;
      continue;
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t r = 0; r < rows; ++r) m[r * cols + c] *= inv;
  }
  return m;
}

ComplexMatrix haar_unitary(std::size_t dim, std::mt19937_64& rng) {
  const std::vector<cplx> m = haar_isometry(dim, dim, rng);
  ComplexMatrix u(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) u(i, j) = m[i * dim + j];
  return u;
}

std::vector<double> simplex_weights(std::size_t n, std::mt19937_64& rng) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - uniform01(rng));
    sum += x;
  }
  for (auto& x : w) x /= sum;
  return w;
}

DensityMatrix random_density_matrix(std::size_t dim, std::mt19937_64& rng) {
  const std::size_t m = dim * dim;
  const std::vector<double> w = simplex_weights(m, rng);
  ComplexMatrix acc(dim);
  for (std::size_t t = 0; t < m; ++t) {
    const std::vector<cplx> psi = haar_pure_state(dim, rng);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) acc(i, j) += w[t] * psi[i] * std::conj(psi[j]);
  }
  return DensityMatrix(acc);
}

BipartiteState random_bipartite_state(std::size_t dim_a, std::size_t dim_b,
                                      std::mt19937_64& rng) {
  return BipartiteState(random_density_matrix(dim_a * dim_b, rng), dim_a, dim_b);
}

Ensemble random_ensemble(std::size_t dim, std::size_t size, std::mt19937_64& rng) {
  const std::vector<double> w = simplex_weights(size, rng);
  std::vector<Ensemble::Member> members;
  members.reserve(size);
  for (std::size_t t = 0; t < size; ++t)
    members.emplace_back(w[t], random_density_matrix(dim, rng));
  return Ensemble(std::move(members));
}

}  // namespace cohdist
