#include "cohdist/distribution.hpp"

#include <cmath>
#include <cstdio>

#include "cohdist/errors.hpp"
#include "cohdist/tolerances.hpp"
#include "dephased_entropies.hpp"

namespace cohdist {

namespace {

// sum_{i != j} ( sum_k |rho_{ik,jk}| - |sum_k rho_{ik,jk}| ), i.e. the part
// of A's single-index coherence that cancels in the marginal; the B version
// swaps the roles of the index pairs.
double l1_local_accessible(const BipartiteState& rho, Subsystem side) {
  const std::size_t da = rho.dim_a(), db = rho.dim_b();
  double acc = 0.0;
  if (side == Subsystem::A) {
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        if (i == j) continue;
        double abs_sum = 0.0;
        cplx sum = 0.0;
        for (std::size_t k = 0; k < db; ++k) {
          const cplx v = rho.entry(i, k, j, k);
          abs_sum += std::abs(v);
          sum += v;
        }
        acc += abs_sum - std::abs(sum);
      }
  } else {
    for (std::size_t k = 0; k < db; ++k)
      for (std::size_t l = 0; l < db; ++l) {
        if (k == l) continue;
        double abs_sum = 0.0;
        cplx sum = 0.0;
        for (std::size_t i = 0; i < da; ++i) {
          const cplx v = rho.entry(i, k, i, l);
          abs_sum += std::abs(v);
          sum += v;
        }
        acc += abs_sum - std::abs(sum);
      }
  }
  return acc;
}

double l1_remaining(const BipartiteState& rho) {
  const std::size_t da = rho.dim_a(), db = rho.dim_b();
  double s = 0.0;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          if (k == l) continue;
          s += std::abs(rho.entry(i, k, j, l));
        }
    }
  return s;
}

DistributionReport finalize(MeasureKind measure, double c_total, double c_a, double c_b,
                            double acc_a, double acc_b, double remaining) {
  const double residual = c_total - (c_a + acc_a + c_b + acc_b + remaining);
  if (std::abs(residual) > kPartitionTol) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", residual);
    throw PartitionViolationError(std::string("coherence partition residual ") + buf +
                                  " exceeds 1e-7");
  }
  return DistributionReport{measure, c_total, c_a, c_b, acc_a, acc_b, remaining, residual};
}

}  // namespace

double ensemble_accessible_coherence(const Ensemble& ensemble, MeasureKind measure) {
  double avg = 0.0;
  for (const auto& [p, rho] : ensemble.members()) avg += p * coherence(rho, measure);
  return avg - coherence(ensemble.mixture(), measure);
}

double local_accessible_coherence(const BipartiteState& rho, Subsystem side,
                                  MeasureKind measure) {
  if (measure == MeasureKind::L1) return l1_local_accessible(rho, side);
  const auto e = detail::dephased_entropies(rho);
  return side == Subsystem::A ? e.s_atbt - e.s_abt + e.s_a - e.s_at
                              : e.s_atbt - e.s_atb + e.s_b - e.s_bt;
}

double remaining_coherence(const BipartiteState& rho, MeasureKind measure) {
  if (measure == MeasureKind::L1) return l1_remaining(rho);
  const auto e = detail::dephased_entropies(rho);
  return e.s_abt + e.s_atb - e.s_ab - e.s_atbt;
}

DistributionReport distribution_report(const BipartiteState& rho, MeasureKind measure) {
  if (measure == MeasureKind::L1) {
    return finalize(measure, l1_coherence(rho.state()),
                    l1_coherence(partial_trace(rho, Subsystem::A)),
                    l1_coherence(partial_trace(rho, Subsystem::B)),
                    l1_local_accessible(rho, Subsystem::A),
                    l1_local_accessible(rho, Subsystem::B), l1_remaining(rho));
  }
  const auto e = detail::dephased_entropies(rho);
  return finalize(measure,
                  e.s_atbt - e.s_ab,                       // C_AB as the bilateral coherence
                  e.s_at - e.s_a,                          // C_A
                  e.s_bt - e.s_b,                          // C_B
                  e.s_atbt - e.s_abt + e.s_a - e.s_at,     // C^A_A
                  e.s_atbt - e.s_atb + e.s_b - e.s_bt,     // C^A_B
                  e.s_abt + e.s_atb - e.s_ab - e.s_atbt);  // C^T
}

}  // namespace cohdist
