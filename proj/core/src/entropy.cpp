#include "cohdist/entropy.hpp"

#include <cmath>
#include <limits>

#include "cohdist/errors.hpp"
#include "cohdist/tolerances.hpp"

namespace cohdist {

double entropy_bits(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double lam : eigenvalues) {
    if (lam > kEigClamp) s -= lam * std::log2(lam);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const EigenDecomposition d = eigh(rho.mat());
  return entropy_bits(d.eigenvalues);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatchError("relative_entropy: states of dimension " +
                                 std::to_string(rho.dim()) + " and " +
                                 std::to_string(sigma.dim()));
  }

  const EigenDecomposition dr = eigh(rho.mat());
  const EigenDecomposition ds = eigh(sigma.mat());
  const std::size_t n = rho.dim();

  // tr(rho log2 rho) = sum lambda log2 lambda
  double tr_rho_log_rho = 0.0;
  for (double lam : dr.eigenvalues) {
    if (lam > kEigClamp) tr_rho_log_rho += lam * std::log2(lam);
  }

  // tr(rho log2 sigma) over sigma's eigenbasis; any weight of rho on a
  // null eigenvector of sigma makes the divergence infinite.
  double tr_rho_log_sigma = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<cplx> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = ds.eigenvectors(r, j);
    const std::vector<cplx> rv = rho.mat() * v;
    double weight = 0.0;
    for (std::size_t r = 0; r < n; ++r) weight += (std::conj(v[r]) * rv[r]).real();

    const double mu = ds.eigenvalues[j];
    if (mu > kEigClamp) {
      tr_rho_log_sigma += weight * std::log2(mu);
    } else if (weight > kEigClamp) {
      return std::numeric_limits<double>::infinity();
    }
  }

  return tr_rho_log_rho - tr_rho_log_sigma;
}

}  // namespace cohdist
