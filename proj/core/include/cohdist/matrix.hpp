#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cohdist {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. The numeric substrate for every
// state and operator in this library; dimensions stay small (<= 16).
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  const std::vector<cplx>& data() const { return a_; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

  ComplexMatrix adjoint() const;
  cplx trace() const;

  // max |a_ij| over all entries
  double max_abs() const;
  double frobenius_norm() const;

  // max |a_ij - conj(a_ji)|
  double hermiticity_defect() const;
  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

  // (M + M^dagger) / 2
  ComplexMatrix symmetrized() const;

  bool all_finite() const;

private:
  std::size_t dim_ = 0;
  std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx s, ComplexMatrix m);
std::vector<cplx> operator*(const ComplexMatrix& m, const std::vector<cplx>& v);

// (A (x) B)[i*dB + k, j*dB + l] = A(i,j) * B(k,l)
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// |psi><psi| without normalization
ComplexMatrix outer(const std::vector<cplx>& psi);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace cohdist
