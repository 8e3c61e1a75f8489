#pragma once

#include <vector>

#include "cohdist/matrix.hpp"

namespace cohdist {

// Spectral data of a Hermitian matrix. Eigenvalues ascending; eigenvector k
// is column k of `eigenvectors`, normalized and mutually orthogonal.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  // V * diag(lambda) * V^dagger
  ComplexMatrix reconstruct() const;
};

// Cyclic Jacobi diagonalization of a Hermitian matrix. Deterministic for
// identical input; ties in the ascending eigenvalue order are broken by the
// original column index. Throws NotHermitianError when the input fails the
// 1e-9 Hermiticity check; the input is symmetrized afterwards so the
// iteration sees exactly Hermitian data.
EigenDecomposition eigh(const ComplexMatrix& h);

// Sum of absolute eigenvalues. Hermitian input only.
double trace_norm(const ComplexMatrix& h);

}  // namespace cohdist
