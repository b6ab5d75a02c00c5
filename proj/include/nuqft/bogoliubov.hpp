#pragma once

#include "nuqft/model.hpp"

namespace nuqft {

/// Magnitudes of the Bogoliubov coefficients between the two mass
/// representations at momentum |k|. Phases are not tracked.
struct BogoliubovPair {
  double u_abs;  ///< |U_k|
  double v_abs;  ///< |V_k|, zero iff k == 0 or m1 == m2
  double a_k;    ///< common amplitude factor A_k

  double u_sq() const noexcept { return u_abs * u_abs; }
  double v_sq() const noexcept { return v_abs * v_abs; }
};

/// `kin` must have been derived from `params`.
BogoliubovPair bogoliubov_pair(const MixingParams& params, const KinematicPoint& kin) noexcept;

}  // namespace nuqft
