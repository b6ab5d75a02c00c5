#include "nuqft/model.hpp"

#include <cmath>
#include <numbers>

namespace nuqft {

MixingParams::MixingParams(double m1, double m2, double theta)
    : m1_(m1), m2_(m2), theta_(theta) {
  if (!std::isfinite(m1) || m1 <= 0.0) {
    throw DomainError("m1", "must be a positive finite mass");
  }
  if (!std::isfinite(m2) || m2 <= 0.0) {
    throw DomainError("m2", "must be a positive finite mass");
  }
  if (m2 < m1) {
    throw DomainError("m2", "ordering convention requires m2 >= m1");
  }
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi / 2) {
    throw DomainError("theta", "mixing angle must lie in [0, pi/2]");
  }
}

double MixingParams::sin_2theta() const noexcept { return std::sin(2.0 * theta_); }

double MixingParams::sin_sq_2theta() const noexcept {
  const double s = sin_2theta();
  return s * s;
}

double MixingParams::momentum_scale() const noexcept { return std::sqrt(m1_ * m2_); }

FlavorMasses derive_flavor_masses(const MixingParams& params) noexcept {
  const double c = std::cos(params.theta());
  const double s = std::sin(params.theta());
  const double m1 = params.m1();
  const double m2 = params.m2();
  return {
      .m_e = m1 * c * c + m2 * s * s,
      .m_mu = m1 * s * s + m2 * c * c,
      .m_emu = (m2 - m1) * s * c,
  };
}

MassEigensystem diagonalize(const FlavorMasses& masses) noexcept {
  const double half_trace = 0.5 * (masses.m_e + masses.m_mu);
  const double half_split = 0.5 * (masses.m_mu - masses.m_e);
  const double radius = std::hypot(half_split, masses.m_emu);
  // tan(2 theta) = 2 m_emu / (m_mu - m_e); atan2 keeps 2 theta in [0, pi]
  // because m_emu >= 0 under the ordering convention.
  const double theta = 0.5 * std::atan2(2.0 * masses.m_emu, masses.m_mu - masses.m_e);
  return {half_trace - radius, half_trace + radius, theta};
}

KinematicPoint kinematics(const MixingParams& params, double k) {
  if (!std::isfinite(k) || k < 0.0) {
    throw DomainError("k", "momentum must be a nonnegative finite number");
  }
  const double m1 = params.m1();
  const double m2 = params.m2();
  const double omega1 = std::sqrt(k * k + m1 * m1);
  const double omega2 = std::sqrt(k * k + m2 * m2);
  // (omega2 - omega1)/2 rewritten without the cancellation at large k.
  const double omega_minus = 0.5 * (m2 - m1) * (m2 + m1) / (omega1 + omega2);
  return {
      .k = k,
      .k_tilde = k / params.momentum_scale(),
      .omega1 = omega1,
      .omega2 = omega2,
      .omega_minus = omega_minus,
      .omega_plus = 0.5 * (omega1 + omega2),
  };
}

KinematicPoint kinematics_at_k_tilde(const MixingParams& params, double k_tilde) {
  if (!std::isfinite(k_tilde) || k_tilde < 0.0) {
    throw DomainError("k_tilde", "momentum must be a nonnegative finite number");
  }
  KinematicPoint kin = kinematics(params, k_tilde * params.momentum_scale());
  kin.k_tilde = k_tilde;
  return kin;
}

}  // namespace nuqft
