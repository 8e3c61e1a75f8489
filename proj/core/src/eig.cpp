#include "cohdist/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cohdist/errors.hpp"
#include "cohdist/tolerances.hpp"

namespace cohdist {

namespace {

// Frobenius norm of the strict upper triangle.
double off_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p + 1 < a.dim(); ++p)
    for (std::size_t q = p + 1; q < a.dim(); ++q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

// One complex Givens rotation zeroing a(p,q). With u = a_pq/|a_pq| the
// rotation is J_pp = c, J_pq = s*u, J_qp = -s*conj(u), J_qq = c, applied as
// A <- J^dagger A J and V <- V J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx g = a(p, q);
  const double absg = std::abs(g);
  if (absg == 0.0) return;

  const cplx u = g / absg;
  const double alpha = a(p, p).real();
  const double beta = a(q, q).real();
  const double tau = (beta - alpha) / (2.0 * absg);
  const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const cplx arp = a(r, p);
    const cplx arq = a(r, q);
    a(r, p) = c * arp - s * std::conj(u) * arq;
    a(r, q) = s * u * arp + c * arq;
    a(p, r) = std::conj(a(r, p));
    a(q, r) = std::conj(a(r, q));
  }
  a(p, p) = alpha - t * absg;
  a(q, q) = beta + t * absg;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t r = 0; r < n; ++r) {
    const cplx vrp = v(r, p);
    const cplx vrq = v(r, q);
    v(r, p) = c * vrp - s * std::conj(u) * vrq;
    v(r, q) = s * u * vrp + c * vrq;
  }
}

}  // namespace

ComplexMatrix EigenDecomposition::reconstruct() const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += eigenvectors(i, k) * eigenvalues[k] * std::conj(eigenvectors(j, k));
      out(i, j) = s;
    }
  return out;
}

EigenDecomposition eigh(const ComplexMatrix& h) {
  if (!h.all_finite()) throw NotHermitianError("eigh: matrix contains non-finite entries");
  const double defect = h.hermiticity_defect();
  if (defect > kHermitianTol) {
    throw NotHermitianError("eigh: matrix is not Hermitian, max |H(i,j) - conj(H(j,i))| = " +
                            std::to_string(defect));
  }

  const std::size_t n = h.dim();
  ComplexMatrix a = h.symmetrized();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(a.frobenius_norm(), 1e-300);
  const double target = 1e-14 * scale;
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm(a) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

double trace_norm(const ComplexMatrix& h) {
  const EigenDecomposition d = eigh(h);
  double s = 0.0;
  for (double lam : d.eigenvalues) s += std::abs(lam);
  return s;
}

}  // namespace cohdist
