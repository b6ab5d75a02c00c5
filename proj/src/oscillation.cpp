#include "nuqft/oscillation.hpp"

#include <cmath>

namespace nuqft {

namespace {

double sin_sq(double x) noexcept {
  const double s = std::sin(x);
  return s * s;
}

ProbabilityPair from_transition(double transition) noexcept {
  return {transition, 1.0 - transition};
}

}  // namespace

ProbabilityPair qft_probability(const MixingParams& params, const KinematicPoint& kin,
                                const BogoliubovPair& bog, double t) noexcept {
  const double bracket =
      bog.u_sq() * sin_sq(kin.omega_minus * t) + bog.v_sq() * sin_sq(kin.omega_plus * t);
  return from_transition(params.sin_sq_2theta() * bracket);
}

ProbabilityPair qm_probability(const MixingParams& params, const KinematicPoint& kin,
                               double t) noexcept {
  return from_transition(params.sin_sq_2theta() * sin_sq(kin.omega_minus * t));
}

}  // namespace nuqft
