#pragma once

#include "nuqft/bogoliubov.hpp"
#include "nuqft/model.hpp"

namespace nuqft {

/// Transition (sigma -> rho, sigma != rho) and survival (sigma -> sigma)
/// probabilities. survival is always computed as 1 - transition.
struct ProbabilityPair {
  double transition;
  double survival;
};

/// Exact field-theoretic flavor-charge expectation values.
///
/// Arguments omega * t are reduced by the standard library in double
/// precision; accuracy degrades once |omega * t| exceeds about 1e8.
ProbabilityPair qft_probability(const MixingParams& params, const KinematicPoint& kin,
                                const BogoliubovPair& bog, double t) noexcept;

/// Quantum-mechanical (Pontecorvo) limit: sin^2(2 theta) sin^2(omega_minus t).
ProbabilityPair qm_probability(const MixingParams& params, const KinematicPoint& kin,
                               double t) noexcept;

}  // namespace nuqft
