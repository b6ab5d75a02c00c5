#include "nuqft/uncertainty.hpp"

#include <cmath>

#include "nuqft/oscillation.hpp"

namespace nuqft {

namespace {

// survival (1 - survival), using the unrounded transition for 1 - survival:
// 1 - (1 - Q) loses Q entirely once Q drops below machine epsilon.
double flavor_variance(const ProbabilityPair& p) noexcept { return p.survival * p.transition; }

}  // namespace

double commutator_c(const MixingParams& params, const KinematicPoint& kin,
                    const BogoliubovPair& bog, double t) noexcept {
  const double inner = bog.u_sq() * std::sin(2.0 * kin.omega_minus * t) +
                       bog.v_sq() * std::sin(2.0 * kin.omega_plus * t);
  return params.sin_2theta() * std::abs(inner);
}

UncertaintyRecord f_qft(const MixingParams& params, const KinematicPoint& kin,
                        const BogoliubovPair& bog, double t) noexcept {
  const ProbabilityPair probability = qft_probability(params, kin, bog, t);
  const double c = commutator_c(params, kin, bog, t);
  const double m_emu = derive_flavor_masses(params).m_emu;
  const double sigma_q_sq = flavor_variance(probability);
  return {sigma_q_sq, m_emu * m_emu, c, sigma_q_sq - 0.25 * c * c};
}

UncertaintyRecord f_qm(const MixingParams& params, const KinematicPoint& kin,
                       double t) noexcept {
  const ProbabilityPair probability = qm_probability(params, kin, t);
  const double transition_2t = qm_probability(params, kin, 2.0 * t).transition;
  const double c = params.sin_2theta() * std::abs(std::sin(2.0 * kin.omega_minus * t));
  const double m_emu = derive_flavor_masses(params).m_emu;
  const double sigma_q_sq = flavor_variance(probability);
  return {sigma_q_sq, m_emu * m_emu, c, sigma_q_sq - 0.25 * transition_2t};
}

}  // namespace nuqft
