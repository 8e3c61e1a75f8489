#include "cohdist/correlations.hpp"

#include "dephased_entropies.hpp"

namespace cohdist {

double mutual_information(const BipartiteState& rho) {
  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  const double s_ab = von_neumann_entropy(rho.state());
  return s_a + s_b - s_ab;
}

double discord(const BipartiteState& rho, MeasurementSide side) {
  const auto e = detail::dephased_entropies(rho);
  switch (side) {
    case MeasurementSide::OnB:
      return e.s_b - e.s_ab - e.s_bt + e.s_abt;
    case MeasurementSide::OnA:
      return e.s_a - e.s_ab - e.s_at + e.s_atb;
    case MeasurementSide::Both:
      break;
  }
  return e.s_a + e.s_b - e.s_ab - e.s_at - e.s_bt + e.s_atbt;
}

double classical_correlation(const BipartiteState& rho, CorrelationSide side) {
  const Ensemble conditional = conditional_ensemble(rho, Subsystem::B);
  return side == CorrelationSide::Left ? holevo(conditional) : dephased_holevo(conditional);
}

double holevo(const Ensemble& ensemble) {
  double avg = 0.0;
  for (const auto& [p, rho] : ensemble.members()) avg += p * von_neumann_entropy(rho);
  return von_neumann_entropy(ensemble.mixture()) - avg;
}

double dephased_holevo(const Ensemble& ensemble) {
  double avg = 0.0;
  for (const auto& [p, rho] : ensemble.members()) avg += p * von_neumann_entropy(dephase(rho));
  return von_neumann_entropy(dephase(ensemble.mixture())) - avg;
}

DiscordReport discord_report(const BipartiteState& rho) {
  const auto e = detail::dephased_entropies(rho);
  return DiscordReport{
      .mutual_info = e.s_a + e.s_b - e.s_ab,
      .discord_left = e.s_b - e.s_ab - e.s_bt + e.s_abt,
      .discord_right = e.s_a - e.s_ab - e.s_at + e.s_atb,
      .discord_both = e.s_a + e.s_b - e.s_ab - e.s_at - e.s_bt + e.s_atbt,
      .classical_left = e.s_a + e.s_bt - e.s_abt,
      .classical_both = e.s_at + e.s_bt - e.s_atbt,
  };
}

}  // namespace cohdist
