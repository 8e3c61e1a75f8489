#include "cohdist/ensemble_search.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cohdist/distribution.hpp"
#include "cohdist/entropy.hpp"
#include "cohdist/errors.hpp"
#include "cohdist/random.hpp"
#include "cohdist/tolerances.hpp"

namespace cohdist {

namespace {

// Unnormalized member vectors y_j (rows). The mixture sum_j |y_j><y_j| is
// invariant under left-multiplication by any unitary, which is what the
// sweep rotations do, so rho is preserved by construction.
using Rows = std::vector<std::vector<cplx>>;

// Eigenpairs above the rank clamp, scaled: w_k = sqrt(lambda_k) e_k.
Rows scaled_eigenvectors(const EigenDecomposition& d) {
  Rows w;
  const std::size_t n = d.eigenvalues.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (d.eigenvalues[k] <= kEigClamp) continue;
    std::vector<cplx> row(n);
    const double s = std::sqrt(d.eigenvalues[k]);
    for (std::size_t r = 0; r < n; ++r) row[r] = s * d.eigenvectors(r, k);
    w.push_back(std::move(row));
  }
  return w;
}

// p_j * C(y_j / |y_j|) for one unnormalized member.
double row_contribution(const std::vector<cplx>& y, MeasureKind measure) {
  double p = 0.0;
  for (const auto& c : y) p += std::norm(c);
  if (p < 1e-30) return 0.0;

  if (measure == MeasureKind::L1) {
    double abs_sum = 0.0;
    for (const auto& c : y) abs_sum += std::abs(c);
    return abs_sum * abs_sum - p;  // p * ((sum|y|)^2 - p) / p
  }
  double s = p * std::log2(p);
  for (const auto& c : y) {
    const double z = std::norm(c);
    if (z / p > kEigClamp) s -= z * std::log2(z);
  }
  return s;
}

struct PairObjective {
  const std::vector<cplx>& ya;
  const std::vector<cplx>& yb;
  MeasureKind measure;

  double operator()(double theta, double phi) const {
    const double c = std::cos(theta), s = std::sin(theta);
    const cplx u = std::polar(s, phi);
    const std::size_t n = ya.size();
    std::vector<cplx> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = c * ya[i] + u * yb[i];
      b[i] = -std::conj(u) * ya[i] + c * yb[i];
    }
    return row_contribution(a, measure) + row_contribution(b, measure);
  }
};

// Coarse grid plus a few rounds of shrinking coordinate search over the
// two-parameter rotation of one row pair. Returns the best (theta, phi)
// found and its objective value.
struct PairBest {
  double theta = 0.0;
  double phi = 0.0;
  double value = -std::numeric_limits<double>::infinity();
};

PairBest optimize_pair(const PairObjective& f) {
  constexpr int kThetaGrid = 7;
  constexpr int kPhiGrid = 8;
  const double half_pi = std::numbers::pi / 2.0;
  const double two_pi = 2.0 * std::numbers::pi;

  PairBest best;
  for (int t = 1; t <= kThetaGrid; ++t) {
    const double theta = half_pi * t / (kThetaGrid + 1);
    for (int u = 0; u < kPhiGrid; ++u) {
      const double phi = two_pi * u / kPhiGrid;
      const double v = f(theta, phi);
      if (v > best.value) best = {theta, phi, v};
    }
  }

  double dt = half_pi / (kThetaGrid + 1);
  double dp = two_pi / kPhiGrid;
  for (int round = 0; round < 10; ++round) {
    for (const double t : {best.theta - dt, best.theta + dt}) {
      const double v = f(t, best.phi);
      if (v > best.value) best = {t, best.phi, v};
    }
    for (const double p : {best.phi - dp, best.phi + dp}) {
      const double v = f(best.theta, p);
      if (v > best.value) best = {best.theta, p, v};
    }
    dt *= 0.5;
    dp *= 0.5;
  }
  return best;
}

void apply_rotation(std::vector<cplx>& ya, std::vector<cplx>& yb, double theta, double phi) {
  const double c = std::cos(theta), s = std::sin(theta);
  const cplx u = std::polar(s, phi);
  for (std::size_t i = 0; i < ya.size(); ++i) {
    const cplx a = ya[i], b = yb[i];
    ya[i] = c * a + u * b;
    yb[i] = -std::conj(u) * a + c * b;
  }
}

double total_objective(const Rows& rows, MeasureKind measure) {
  double s = 0.0;
  for (const auto& y : rows) s += row_contribution(y, measure);
  return s;
}

// Cyclic sweeps until the gain stalls. Returns whether the gain threshold
// was reached within max_iters sweeps.
bool refine(Rows& rows, MeasureKind measure, std::size_t max_iters) {
  const std::size_t m = rows.size();
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    double gain = 0.0;
    for (std::size_t a = 0; a + 1 < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        const PairObjective f{rows[a], rows[b], measure};
        const double current = row_contribution(rows[a], measure) +
                               row_contribution(rows[b], measure);
        const PairBest cand = optimize_pair(f);
        if (cand.value > current) {
          apply_rotation(rows[a], rows[b], cand.theta, cand.phi);
          gain += cand.value - current;
        }
      }
    if (gain < kSweepGainTol) return true;
  }
  return false;
}

Ensemble rows_to_ensemble(const Rows& rows) {
  std::vector<Ensemble::Member> members;
  for (const auto& y : rows) {
    double p = 0.0;
    for (const auto& c : y) p += std::norm(c);
    if (p < kBranchDrop) continue;
    members.emplace_back(p, DensityMatrix::pure(y));
  }
  return Ensemble(std::move(members));
}

Rows rows_from_isometry(const std::vector<cplx>& mixing, std::size_t m, const Rows& w) {
  const std::size_t r = w.size();
  const std::size_t dim = w.front().size();
  Rows rows(m, std::vector<cplx>(dim));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      const cplx mjk = mixing[j * r + k];
      for (std::size_t i = 0; i < dim; ++i) rows[j][i] += mjk * w[k][i];
    }
  return rows;
}

}  // namespace

Ensemble decomposition_from_isometry(const DensityMatrix& rho, const DecompositionSpec& spec) {
  const EigenDecomposition d = eigh(rho.mat());
  const Rows w = scaled_eigenvectors(d);
  if (spec.rank != w.size()) {
    throw RankMismatchError("decomposition spec rank " + std::to_string(spec.rank) +
                            " does not match state rank " + std::to_string(w.size()));
  }
  if (spec.size < spec.rank) {
    throw RankMismatchError("ensemble size " + std::to_string(spec.size) +
                            " is below the rank " + std::to_string(spec.rank));
  }
  if (spec.mixing.size() != spec.size * spec.rank) {
    throw RankMismatchError("mixing grid has " + std::to_string(spec.mixing.size()) +
                            " entries, expected " + std::to_string(spec.size * spec.rank));
  }

  // Orthonormal columns make the induced ensemble mix back to rho.
  for (std::size_t c1 = 0; c1 < spec.rank; ++c1)
    for (std::size_t c2 = c1; c2 < spec.rank; ++c2) {
      cplx dot = 0.0;
      for (std::size_t j = 0; j < spec.size; ++j)
        dot += std::conj(spec.mixing[j * spec.rank + c1]) * spec.mixing[j * spec.rank + c2];
      const double expect = (c1 == c2) ? 1.0 : 0.0;
      if (std::abs(dot - expect) > kOrthoTol) {
        throw ValidationError("mixing columns are not orthonormal within 1e-10");
      }
    }

  return rows_to_ensemble(rows_from_isometry(spec.mixing, spec.size, w));
}

SearchResult max_accessible_coherence(const DensityMatrix& rho, MeasureKind measure,
                                      std::size_t restarts, std::size_t max_iters,
                                      std::uint64_t seed) {
  if (restarts < 1) throw InvalidParameterError("max_accessible_coherence: restarts must be >= 1");

  const double bound = accessible_upper_bound(rho, measure);
  const EigenDecomposition d = eigh(rho.mat());

  if (d.eigenvalues.back() >= 1.0 - kPureEigTol) {
    // Pure state: every decomposition is the state itself.
    Ensemble trivial(std::vector<Ensemble::Member>{{1.0, rho}});
    return SearchResult{0.0, std::move(trivial), 0, true, bound};
  }

  const Rows w = scaled_eigenvectors(d);
  const std::size_t rank = w.size();
  const std::size_t m = 2 * rank;

  // Eigen-ensemble baseline; the search result never falls below it.
  Rows best_rows = w;
  double best_objective = total_objective(best_rows, measure);
  bool best_converged = true;

  for (std::size_t restart = 0; restart < restarts; ++restart) {
    std::mt19937_64 rng(derive_seed(seed, restart));
    Rows rows = rows_from_isometry(haar_isometry(m, rank, rng), m, w);
    const bool converged = refine(rows, measure, max_iters);
    const double objective = total_objective(rows, measure);
    if (objective > best_objective) {
      best_objective = objective;
      best_rows = rows;
      best_converged = converged;
    }
  }

  Ensemble best = rows_to_ensemble(best_rows);
  const double value = ensemble_accessible_coherence(best, measure);
  return SearchResult{value, std::move(best), restarts, best_converged, bound};
}

double accessible_upper_bound(const DensityMatrix& rho, MeasureKind measure) {
  if (measure == MeasureKind::RelativeEntropy) return von_neumann_entropy(rho);
  return std::numeric_limits<double>::infinity();
}

}  // namespace cohdist
