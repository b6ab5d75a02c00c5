#include "nuqft/bogoliubov.hpp"

#include <cassert>
#include <cmath>

namespace nuqft {

BogoliubovPair bogoliubov_pair(const MixingParams& params, const KinematicPoint& kin) noexcept {
  const double k = kin.k;
  const double sum1 = kin.omega1 + params.m1();
  const double sum2 = kin.omega2 + params.m2();

  const double a_k = std::sqrt((sum1 / (2.0 * kin.omega1)) * (sum2 / (2.0 * kin.omega2)));
  const double u_abs = a_k * (1.0 + k * k / (sum1 * sum2));
  // k / (omega + m) is monotone decreasing in m, and so is its rounded value,
  // so m2 >= m1 keeps this difference nonnegative.
  const double v_abs = a_k * (k / sum1 - k / sum2);
  assert(v_abs >= 0.0);
  return {u_abs, v_abs, a_k};
}

}  // namespace nuqft
