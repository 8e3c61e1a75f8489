#include <doctest.h>

#include <cmath>

#include "cohdist/entropy.hpp"
#include "cohdist/errors.hpp"
#include "cohdist/random.hpp"
#include "cohdist/states.hpp"
#include "helpers.hpp"

using namespace cohdist;
using testutil::approx;
using testutil::trace_distance;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

BipartiteState random_bip(std::size_t da, std::size_t db, std::mt19937_64& rng) {
  return random_bipartite_state(da, db, rng);
}

}  // namespace

TEST_CASE("density matrix validation names the violated invariant") {
  ComplexMatrix bad_trace(2);
  bad_trace(0, 0) = 0.5;
  bad_trace(1, 1) = 0.4;
  CHECK_THROWS_WITH_AS(DensityMatrix{bad_trace},
                       doctest::Contains("trace deviation 0.1"), ValidationError);

  ComplexMatrix skew(2);
  skew(0, 0) = 0.5;
  skew(1, 1) = 0.5;
  skew(0, 1) = 0.3;
  CHECK_THROWS_WITH_AS(DensityMatrix{skew}, doctest::Contains("Hermitian"), ValidationError);

  ComplexMatrix indefinite(2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_WITH_AS(DensityMatrix{indefinite},
                       doctest::Contains("positive semidefinite"), ValidationError);
}

TEST_CASE("dephase keeps the diagonal only") {
  ComplexMatrix diag(3);
  diag(0, 0) = 0.2;
  diag(1, 1) = 0.3;
  diag(2, 2) = 0.5;
  const DensityMatrix d(diag);
  CHECK(max_abs_diff(dephase(d).mat(), d.mat()) == 0.0);

  const DensityMatrix plus = DensityMatrix::pure({kInvSqrt2, kInvSqrt2});
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= 0.5;
  CHECK(max_abs_diff(dephase(plus).mat(), half) < 1e-15);
}

TEST_CASE("dephase is idempotent") {
  std::mt19937_64 rng(101);
  for (int rep = 0; rep < 20; ++rep) {
    const DensityMatrix rho = random_density_matrix(3, rng);
    const DensityMatrix once = dephase(rho);
    CHECK(max_abs_diff(dephase(once).mat(), once.mat()) == 0.0);
  }
}

TEST_CASE("dephase_side golden cases") {
  const BipartiteState bell = bell_state();
  ComplexMatrix expected(4);
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  CHECK(max_abs_diff(dephase_side(bell, DephaseSide::AB).mat(), expected) < 1e-15);

  // every k != l entry of the intro state is already zero
  const BipartiteState intro = intro_example_state();
  CHECK(max_abs_diff(dephase_side(intro, DephaseSide::B).mat(), intro.mat()) == 0.0);
}

TEST_CASE("dephasing sides commute and compose to the full dephasing") {
  std::mt19937_64 rng(103);
  for (int rep = 0; rep < 20; ++rep) {
    const BipartiteState rho = random_bip(2, 3, rng);
    const BipartiteState ab = dephase_side(rho, DephaseSide::AB);
    const BipartiteState a_then_b = dephase_side(dephase_side(rho, DephaseSide::A), DephaseSide::B);
    CHECK(max_abs_diff(ab.mat(), a_then_b.mat()) < 1e-15);
    CHECK(max_abs_diff(ab.mat(), dephase(rho.state()).mat()) < 1e-15);
  }
}

TEST_CASE("partial trace factorizes product states") {
  std::mt19937_64 rng(107);
  const DensityMatrix a = random_density_matrix(2, rng);
  const DensityMatrix b = random_density_matrix(3, rng);
  const BipartiteState prod(DensityMatrix(kron(a.mat(), b.mat())), 2, 3);
  CHECK(max_abs_diff(partial_trace(prod, Subsystem::A).mat(), a.mat()) < 1e-12);
  CHECK(max_abs_diff(partial_trace(prod, Subsystem::B).mat(), b.mat()) < 1e-12);
}

TEST_CASE("partial trace of the intro state gives identity marginals") {
  const BipartiteState intro = intro_example_state();
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= 0.5;
  CHECK(max_abs_diff(partial_trace(intro, Subsystem::A).mat(), half) < 1e-15);
  CHECK(max_abs_diff(partial_trace(intro, Subsystem::B).mat(), half) < 1e-15);
}

TEST_CASE("partial trace preserves the trace") {
  std::mt19937_64 rng(109);
  for (int rep = 0; rep < 20; ++rep) {
    const BipartiteState rho = random_bip(3, 2, rng);
    CHECK(approx(partial_trace(rho, Subsystem::A).mat().trace().real(), 1.0, 1e-10));
    CHECK(approx(partial_trace(rho, Subsystem::B).mat().trace().real(), 1.0, 1e-10));
  }
}

TEST_CASE("conditional ensemble of the intro state") {
  const Ensemble e = conditional_ensemble(intro_example_state(), Subsystem::B);
  REQUIRE(e.size() == 2);
  CHECK(approx(e.members()[0].first, 0.5, 1e-12));
  CHECK(approx(e.members()[1].first, 0.5, 1e-12));
  const DensityMatrix plus = DensityMatrix::pure({kInvSqrt2, kInvSqrt2});
  const DensityMatrix minus = DensityMatrix::pure({kInvSqrt2, -kInvSqrt2});
  CHECK(max_abs_diff(e.members()[0].second.mat(), plus.mat()) < 1e-12);
  CHECK(max_abs_diff(e.members()[1].second.mat(), minus.mat()) < 1e-12);
}

TEST_CASE("conditional ensemble of a product state repeats the marginal") {
  std::mt19937_64 rng(113);
  const DensityMatrix a = random_density_matrix(2, rng);
  const DensityMatrix b = random_density_matrix(3, rng);
  const BipartiteState prod(DensityMatrix(kron(a.mat(), b.mat())), 2, 3);
  const Ensemble e = conditional_ensemble(prod, Subsystem::B);
  for (const auto& [p, rho] : e.members()) CHECK(max_abs_diff(rho.mat(), a.mat()) < 1e-10);
}

TEST_CASE("conditional ensemble of the Bell state is classical") {
  const Ensemble e = conditional_ensemble(bell_state(), Subsystem::B);
  REQUIRE(e.size() == 2);
  CHECK(approx(e.members()[0].first, 0.5, 1e-12));
  CHECK(max_abs_diff(e.members()[0].second.mat(), DensityMatrix::pure({1.0, 0.0}).mat()) < 1e-12);
  CHECK(max_abs_diff(e.members()[1].second.mat(), DensityMatrix::pure({0.0, 1.0}).mat()) < 1e-12);
}

TEST_CASE("conditional ensemble mixes to the kept marginal") {
  std::mt19937_64 rng(127);
  for (auto [da, db] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
    for (int rep = 0; rep < 34; ++rep) {
      const BipartiteState rho = random_bip(da, db, rng);
      const Ensemble eb = conditional_ensemble(rho, Subsystem::B);
      CHECK(max_abs_diff(eb.mixture().mat(), partial_trace(rho, Subsystem::A).mat()) < 1e-10);
      const Ensemble ea = conditional_ensemble(rho, Subsystem::A);
      CHECK(max_abs_diff(ea.mixture().mat(), partial_trace(rho, Subsystem::B).mat()) < 1e-10);
    }
  }
}

TEST_CASE("schmidt correlated state") {
  ComplexMatrix classical(2);
  classical(0, 0) = 0.5;
  classical(1, 1) = 0.5;
  const BipartiteState diag_state = schmidt_correlated(classical);
  ComplexMatrix expected(4);
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  CHECK(max_abs_diff(diag_state.mat(), expected) < 1e-15);

  ComplexMatrix bell_coeffs(2);
  bell_coeffs(0, 0) = bell_coeffs(0, 1) = bell_coeffs(1, 0) = bell_coeffs(1, 1) = 0.5;
  CHECK(max_abs_diff(schmidt_correlated(bell_coeffs).mat(), bell_state().mat()) < 1e-15);

  ComplexMatrix invalid(2);
  invalid(0, 0) = 1.5;
  invalid(1, 1) = -0.5;
  CHECK_THROWS_AS(schmidt_correlated(invalid), InvalidCoefficientsError);
}

TEST_CASE("schmidt correlated marginals are diagonal") {
  std::mt19937_64 rng(131);
  for (std::size_t d : {2, 3}) {
    for (int rep = 0; rep < 10; ++rep) {
      const BipartiteState s = schmidt_correlated(random_density_matrix(d, rng).mat());
      for (Subsystem side : {Subsystem::A, Subsystem::B}) {
        const ComplexMatrix m = partial_trace(s, side).mat();
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            if (i != j) CHECK(std::abs(m(i, j)) < 1e-12);
      }
    }
  }
}

TEST_CASE("ising ground state limits") {
  // J << lambda: maximally entangled up to O(epsilon)
  const BipartiteState near_bell = ising_ground_state(0.0, 1.0, 1e-3);
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= 0.5;
  CHECK(trace_distance(partial_trace(near_bell, Subsystem::A).mat(), half) < 0.01);
  CHECK(trace_distance(partial_trace(near_bell, Subsystem::B).mat(), half) < 0.01);
  double best = 1.0;
  for (double sa : {1.0, -1.0}) {
    const DensityMatrix phi = DensityMatrix::pure({kInvSqrt2, 0.0, 0.0, sa * kInvSqrt2});
    const DensityMatrix psi = DensityMatrix::pure({0.0, kInvSqrt2, sa * kInvSqrt2, 0.0});
    best = std::min({best, trace_distance(near_bell.mat(), phi.mat()),
                     trace_distance(near_bell.mat(), psi.mat())});
  }
  CHECK(best < 0.01);

  // J >> lambda: product of sigma-x eigenstates
  const BipartiteState near_product = ising_ground_state(10.0, 1.0, 1e-3);
  best = 1.0;
  for (double sa : {1.0, -1.0})
    for (double sb : {1.0, -1.0}) {
      const std::vector<cplx> qa = {kInvSqrt2, sa * kInvSqrt2};
      const std::vector<cplx> qb = {kInvSqrt2, sb * kInvSqrt2};
      const DensityMatrix prod(kron(outer(qa), outer(qb)));
      best = std::min(best, trace_distance(near_product.mat(), prod.mat()));
    }
  CHECK(best < 0.05);

  CHECK_THROWS_AS(ising_ground_state(1.0, 0.0, 1e-3), InvalidParameterError);
}

TEST_CASE("ising ground state is an eigenvector of the Hamiltonian") {
  const double lambda = 1.3, coupling = 0.7, eps = 1e-3;
  ComplexMatrix h = cplx(lambda) * kron(pauli_x(), pauli_x());
  h += cplx(coupling) * (kron(pauli_x(), ComplexMatrix::identity(2)) +
                         kron(ComplexMatrix::identity(2), pauli_x()));
  h += cplx(eps * lambda) * (kron(pauli_z(), ComplexMatrix::identity(2)) +
                             kron(ComplexMatrix::identity(2), pauli_z()));

  const BipartiteState ground = ising_ground_state(coupling, lambda, eps);
  const auto rho_eig = eigh(ground.mat());
  std::vector<cplx> v(4);
  for (std::size_t r = 0; r < 4; ++r) v[r] = rho_eig.eigenvectors(r, 3);  // top eigenvector

  const std::vector<cplx> hv = h * v;
  cplx energy = 0.0;
  for (std::size_t r = 0; r < 4; ++r) energy += std::conj(v[r]) * hv[r];
  double residual = 0.0;
  for (std::size_t r = 0; r < 4; ++r) residual = std::max(residual, std::abs(hv[r] - energy * v[r]));
  CHECK(residual < 1e-9);
  CHECK(approx(energy.real(), eigh(h).eigenvalues[0], 1e-10));
}

TEST_CASE("intro example state entries") {
  const BipartiteState intro = intro_example_state();
  CHECK(approx(intro.mat()(0, 2).real(), 0.25, 1e-15));
  CHECK(approx(intro.mat()(1, 3).real(), -0.25, 1e-15));
  CHECK(intro.mat()(0, 2).imag() == 0.0);
  // construction already ran the DensityMatrix validation
  CHECK(intro.dim_a() == 2);
  CHECK(intro.dim_b() == 2);
}

TEST_CASE("negativity golden cases") {
  std::mt19937_64 rng(137);
  const DensityMatrix a = random_density_matrix(2, rng);
  const DensityMatrix b = random_density_matrix(2, rng);
  const BipartiteState prod(DensityMatrix(kron(a.mat(), b.mat())), 2, 2);
  CHECK(approx(negativity(prod), 0.0, 1e-9));

  CHECK(approx(negativity(bell_state()), 1.0, 1e-10));
}

TEST_CASE("negativity of schmidt correlated states matches the coefficient sum") {
  std::mt19937_64 rng(139);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix coeffs = random_density_matrix(3, rng);
    const BipartiteState s = schmidt_correlated(coeffs.mat());
    double expected = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) expected += std::abs(coeffs.mat()(i, j));
    CHECK(approx(negativity(s), expected, 1e-9));
  }
}

TEST_CASE("negativity is independent of the transposed side") {
  std::mt19937_64 rng(149);
  for (int rep = 0; rep < 20; ++rep) {
    const BipartiteState rho = random_bip(2, 3, rng);
    const double nb = trace_norm(partial_transpose(rho, Subsystem::B));
    const double na = trace_norm(partial_transpose(rho, Subsystem::A));
    CHECK(approx(na, nb, 1e-10));
  }
}

TEST_CASE("ensemble invariants") {
  std::mt19937_64 rng(151);
  const Ensemble e = random_ensemble(3, 4, rng);
  ComplexMatrix acc(3);
  for (const auto& [p, rho] : e.members()) {
    ComplexMatrix term = rho.mat();
    term *= p;
    acc += term;
  }
  CHECK(max_abs_diff(e.mixture().mat(), acc) < 1e-10);

  CHECK_THROWS_AS(Ensemble(std::vector<Ensemble::Member>{{0.5, random_density_matrix(2, rng)}}),
                  ValidationError);
  CHECK_THROWS_AS(Ensemble(std::vector<Ensemble::Member>{{0.5, random_density_matrix(2, rng)},
                                                         {0.5, random_density_matrix(3, rng)}}),
                  DimensionMismatchError);
}

TEST_CASE("zero-probability measurement branches are dropped") {
  // B marginal is |0><0|: measuring B can only yield outcome 0
  std::mt19937_64 rng(157);
  const DensityMatrix a = random_density_matrix(2, rng);
  const BipartiteState prod(DensityMatrix(kron(a.mat(), outer({1.0, 0.0}))), 2, 2);
  const Ensemble e = conditional_ensemble(prod, Subsystem::B);
  REQUIRE(e.size() == 1);
  CHECK(approx(e.members()[0].first, 1.0, 1e-12));
  CHECK(max_abs_diff(e.members()[0].second.mat(), a.mat()) < 1e-12);
}
