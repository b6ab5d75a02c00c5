#include "nuqft/leggett_garg.hpp"

#include <cmath>

#include "nuqft/oscillation.hpp"
#include "nuqft/uncertainty.hpp"

namespace nuqft {

namespace {

LGRecord make_record(const ProbabilityPair& at_t, double transition_2t, double f_value) {
  const double w = at_t.survival * at_t.transition - transition_2t;
  return {w, f_value, f_value - w, w > kViolationTolerance};
}

struct GapPhases {
  double p;
  double q;
};

GapPhases gap_phases(const KinematicPoint& kin, double t, GapPhase phase) noexcept {
  const double factor = phase == GapPhase::doubled ? 2.0 : 1.0;
  return {std::sin(factor * kin.omega_minus * t), std::sin(factor * kin.omega_plus * t)};
}

}  // namespace

LGRecord w_qft(const MixingParams& params, const KinematicPoint& kin,
               const BogoliubovPair& bog, double t) noexcept {
  return make_record(qft_probability(params, kin, bog, t),
                     qft_probability(params, kin, bog, 2.0 * t).transition,
                     f_qft(params, kin, bog, t).f_value);
}

LGRecord w_qm(const MixingParams& params, const KinematicPoint& kin, double t) noexcept {
  return make_record(qm_probability(params, kin, t),
                     qm_probability(params, kin, 2.0 * t).transition,
                     f_qm(params, kin, t).f_value);
}

double qft_gap_closed_form(const MixingParams& params, const KinematicPoint& kin,
                           const BogoliubovPair& bog, double t, GapPhase phase) noexcept {
  const auto [p, q] = gap_phases(kin, t, phase);
  const double u2 = bog.u_sq();
  const double v2 = bog.v_sq();
  const double sum = u2 * v2 * (p - q) * (p - q) + 3.0 * v2 * q * q + 3.0 * u2 * p * p;
  return 0.25 * params.sin_sq_2theta() * sum;
}

double qft_gap_expanded_form(const MixingParams& params, const KinematicPoint& kin,
                             const BogoliubovPair& bog, double t) noexcept {
  const auto [p, q] = gap_phases(kin, t, GapPhase::doubled);
  const double u2 = bog.u_sq();
  const double v2 = bog.v_sq();
  const double sum = u2 * (4.0 - u2) * p * p + v2 * (4.0 - v2) * q * q - 2.0 * u2 * v2 * p * q;
  return 0.25 * params.sin_sq_2theta() * sum;
}

}  // namespace nuqft
