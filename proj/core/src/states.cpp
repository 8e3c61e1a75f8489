#include "cohdist/states.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "cohdist/errors.hpp"
#include "cohdist/tolerances.hpp"

namespace cohdist {

namespace {

std::string fmt_residual(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

const std::vector<cplx> kKetPlus = {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
const std::vector<cplx> kKetMinus = {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)};

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : m_(m) {
  if (m_.dim() == 0) throw ValidationError("density matrix must have dimension >= 1");
  if (!m_.all_finite()) throw ValidationError("density matrix contains non-finite entries");

  const double defect = m_.hermiticity_defect();
  if (defect > kHermitianTol) {
    throw ValidationError("density matrix is not Hermitian: defect " + fmt_residual(defect) +
                          " exceeds 1e-9");
  }
  m_ = m_.symmetrized();

  const double trace_dev = std::abs(m_.trace().real() - 1.0);
  if (trace_dev > kTraceTol) {
    throw ValidationError("density matrix trace deviation " + fmt_residual(trace_dev) +
                          " exceeds 1e-9");
  }

  const EigenDecomposition d = eigh(m_);
  const double min_eig = d.eigenvalues.front();
  if (min_eig < -kPsdTol) {
    throw ValidationError("density matrix is not positive semidefinite: min eigenvalue " +
                          fmt_residual(min_eig) + " below -1e-9");
  }
}

DensityMatrix DensityMatrix::pure(const std::vector<cplx>& psi) {
  double n2 = 0.0;
  for (const auto& c : psi) n2 += std::norm(c);
  if (n2 <= 0.0) throw ValidationError("pure state vector has zero norm");
  const double inv = 1.0 / std::sqrt(n2);
  std::vector<cplx> u(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) u[i] = psi[i] * inv;
  return DensityMatrix(outer(u));
}

BipartiteState::BipartiteState(DensityMatrix state, std::size_t dim_a, std::size_t dim_b)
    : state_(std::move(state)), dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a_ == 0 || dim_b_ == 0 || dim_a_ * dim_b_ != state_.dim()) {
    throw DimensionMismatchError("bipartite split " + std::to_string(dim_a_) + "x" +
                                 std::to_string(dim_b_) + " does not match dimension " +
                                 std::to_string(state_.dim()));
  }
}

Ensemble::Ensemble(std::vector<Member> members)
    : members_(std::move(members)),
      mixture_([&]() -> DensityMatrix {
        if (members_.empty()) throw ValidationError("ensemble must have at least one member");
        const std::size_t dim = members_.front().second.dim();
        double psum = 0.0;
        ComplexMatrix acc(dim);
        for (const auto& [p, rho] : members_) {
          if (rho.dim() != dim) throw DimensionMismatchError("ensemble members differ in dimension");
          if (p < 0.0) throw ValidationError("ensemble probability is negative");
          psum += p;
          ComplexMatrix term = rho.mat();
          term *= p;
          acc += term;
        }
        if (std::abs(psum - 1.0) > kProbSumTol) {
          throw ValidationError("ensemble probabilities sum to " + std::to_string(psum) +
                                ", deviation exceeds 1e-9");
        }
        return DensityMatrix(acc);
      }()) {}

DensityMatrix dephase(const DensityMatrix& rho) {
  ComplexMatrix out(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) out(i, i) = rho.mat()(i, i);
  return DensityMatrix(out);
}

BipartiteState dephase_side(const BipartiteState& rho, DephaseSide side) {
  const std::size_t da = rho.dim_a(), db = rho.dim_b();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < db; ++k)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t l = 0; l < db; ++l) {
          const bool keep_a = (side == DephaseSide::B) || i == j;
          const bool keep_b = (side == DephaseSide::A) || k == l;
          if (keep_a && keep_b) out(i * db + k, j * db + l) = rho.entry(i, k, j, l);
        }
  return BipartiteState(DensityMatrix(out), da, db);
}

DensityMatrix partial_trace(const BipartiteState& rho, Subsystem keep) {
  const std::size_t da = rho.dim_a(), db = rho.dim_b();
  if (keep == Subsystem::A) {
    ComplexMatrix out(da);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < db; ++k) s += rho.entry(i, k, j, k);
        out(i, j) = s;
      }
    return DensityMatrix(out);
  }
  ComplexMatrix out(db);
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t l = 0; l < db; ++l) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < da; ++i) s += rho.entry(i, k, i, l);
      out(k, l) = s;
    }
  return DensityMatrix(out);
}

Ensemble conditional_ensemble(const BipartiteState& rho, Subsystem measured) {
  const std::size_t da = rho.dim_a(), db = rho.dim_b();
  std::vector<Ensemble::Member> members;

  if (measured == Subsystem::B) {
    for (std::size_t k = 0; k < db; ++k) {
      double p = 0.0;
      for (std::size_t i = 0; i < da; ++i) p += rho.entry(i, k, i, k).real();
      if (p < kBranchDrop) continue;
      ComplexMatrix block(da);
      for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) block(i, j) = rho.entry(i, k, j, k) / p;
      members.emplace_back(p, DensityMatrix(block));
    }
  } else {
    for (std::size_t i = 0; i < da; ++i) {
      double p = 0.0;
      for (std::size_t k = 0; k < db; ++k) p += rho.entry(i, k, i, k).real();
      if (p < kBranchDrop) continue;
      ComplexMatrix block(db);
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) block(k, l) = rho.entry(i, k, i, l) / p;
      members.emplace_back(p, DensityMatrix(block));
    }
  }
  return Ensemble(std::move(members));
}

BipartiteState schmidt_correlated(const ComplexMatrix& coefficients) {
  const std::size_t d = coefficients.dim();
  ComplexMatrix validated(d);
  try {
    validated = DensityMatrix(coefficients).mat();
  } catch (const ValidationError& e) {
    throw InvalidCoefficientsError(std::string("coefficient grid is not a density matrix: ") +
                                   e.what());
  }
  ComplexMatrix out(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i * d + i, j * d + j) = validated(i, j);
  return BipartiteState(DensityMatrix(out), d, d);
}

BipartiteState ising_ground_state(double coupling_j, double lambda, double epsilon) {
  if (lambda == 0.0) throw InvalidParameterError("ising_ground_state: lambda must be nonzero");

  const ComplexMatrix sx = pauli_x();
  const ComplexMatrix sz = pauli_z();
  const ComplexMatrix id = ComplexMatrix::identity(2);

  ComplexMatrix h = cplx(lambda) * kron(sx, sx);
  h += cplx(coupling_j) * (kron(sx, id) + kron(id, sx));
  h += cplx(epsilon * lambda) * (kron(sz, id) + kron(id, sz));

  const EigenDecomposition d = eigh(h);
  std::vector<cplx> ground(4);
  for (std::size_t r = 0; r < 4; ++r) ground[r] = d.eigenvectors(r, 0);
  return BipartiteState(DensityMatrix::pure(ground), 2, 2);
}

BipartiteState intro_example_state() {
  const ComplexMatrix plus = outer(kKetPlus);
  const ComplexMatrix minus = outer(kKetMinus);
  const ComplexMatrix ket0 = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}});
  const ComplexMatrix ket1 = ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}});
  ComplexMatrix m = kron(plus, ket0) + kron(minus, ket1);
  m *= 0.5;
  return BipartiteState(DensityMatrix(m), 2, 2);
}

BipartiteState bell_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return BipartiteState(DensityMatrix::pure({r, 0.0, 0.0, r}), 2, 2);
}

BipartiteState product_plus_state() {
  return BipartiteState(DensityMatrix::pure({0.5, 0.5, 0.5, 0.5}), 2, 2);
}

ComplexMatrix partial_transpose(const BipartiteState& rho, Subsystem side) {
  const std::size_t da = rho.dim_a(), db = rho.dim_b();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < db; ++k)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t l = 0; l < db; ++l) {
          const cplx v = (side == Subsystem::B) ? rho.entry(i, l, j, k) : rho.entry(j, k, i, l);
          out(i * db + k, j * db + l) = v;
        }
  return out;
}

double negativity(const BipartiteState& rho) {
  return trace_norm(partial_transpose(rho, Subsystem::B)) - 1.0;
}

}  // namespace cohdist
