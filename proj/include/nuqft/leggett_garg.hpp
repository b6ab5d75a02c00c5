#pragma once

#include "nuqft/bogoliubov.hpp"
#include "nuqft/model.hpp"

namespace nuqft {

/// W > kViolationTolerance counts as a violation; anything smaller is
/// treated as rounding noise at a saturation point.
inline constexpr double kViolationTolerance = 1e-12;

/// Wigner-form Leggett-Garg functional for the three-time protocol: a muon
/// neutrino prepared at t0 = 0, flavor measured at t and 2t, all outcomes +1.
struct LGRecord {
  double w_value;  ///< positive means the inequality is violated
  double f_value;  ///< paired uncertainty functional
  double gap;      ///< f_value - w_value, never negative beyond rounding
  bool violated;
};

/// W = Q_ee(t) Q_mue(t) - Q_mue(2t) with field-theoretic probabilities.
LGRecord w_qft(const MixingParams& params, const KinematicPoint& kin,
               const BogoliubovPair& bog, double t) noexcept;

/// Same functional with Pontecorvo probabilities. Its gap is exactly
/// (3/4) P(2t).
LGRecord w_qm(const MixingParams& params, const KinematicPoint& kin, double t) noexcept;

/// Phase convention for the closed-form QFT gap.
enum class GapPhase {
  doubled,  ///< sin(2 w+- t): the only convention consistent with F and W
  single,   ///< sin(w+- t): kept so the verify suite can show it fails
};

/// F_QFT - W_QFT as the manifestly nonnegative sum
///   sin^2(2 theta)/4 [U^2 V^2 (p - q)^2 + 3 V^2 q^2 + 3 U^2 p^2]
/// with p = sin(2 w- t), q = sin(2 w+ t).
double qft_gap_closed_form(const MixingParams& params, const KinematicPoint& kin,
                           const BogoliubovPair& bog, double t,
                           GapPhase phase = GapPhase::doubled) noexcept;

/// The same gap before the normalization U^2 + V^2 = 1 is used:
///   sin^2(2 theta)/4 [U^2 (4 - U^2) p^2 + V^2 (4 - V^2) q^2 - 2 U^2 V^2 p q].
double qft_gap_expanded_form(const MixingParams& params, const KinematicPoint& kin,
                             const BogoliubovPair& bog, double t) noexcept;

}  // namespace nuqft
