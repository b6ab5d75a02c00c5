#pragma once

#include "nuqft/bogoliubov.hpp"
#include "nuqft/model.hpp"

namespace nuqft {

/// Flavor-mass Robertson-Schroedinger uncertainty quantities at one time.
struct UncertaintyRecord {
  double sigma_q_sq;  ///< flavor-charge variance, survival (1 - survival)
  double sigma_m_sq;  ///< mass-charge variance m_emu^2, in mass^2 units
  double c_of_t;      ///< commutator magnitude divided by m_emu
  double f_value;     ///< sigma_q_sq - c_of_t^2 / 4 (the m_emu^2 factor cancels)
};

/// C(t) = sin(2 theta) |U^2 sin(2 w- t) + V^2 sin(2 w+ t)|.
double commutator_c(const MixingParams& params, const KinematicPoint& kin,
                    const BogoliubovPair& bog, double t) noexcept;

UncertaintyRecord f_qft(const MixingParams& params, const KinematicPoint& kin,
                        const BogoliubovPair& bog, double t) noexcept;

/// Quantum-mechanical limit, F = P(t)(1 - P(t)) - P(2t)/4.
///
/// The subtracted term is the first power of P(2t): it is the exact
/// |V| -> 0 limit of C^2/4. `c_of_t` holds that limit,
/// sin(2 theta) |sin(2 w- t)|.
UncertaintyRecord f_qm(const MixingParams& params, const KinematicPoint& kin,
                       double t) noexcept;

}  // namespace nuqft
