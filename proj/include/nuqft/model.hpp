#pragma once

// Two-flavor mixing parameters and per-momentum kinematics.
//
// Natural units throughout (hbar = c = 1): masses, momenta and energies share
// one arbitrary unit and time carries the inverse unit.

#include <stdexcept>
#include <string>

namespace nuqft {

/// Raised when a parameter set violates its domain. `field()` names the
/// offending input so front ends can report it.
class DomainError : public std::invalid_argument {
 public:
  DomainError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Mass-basis parameters (m1, m2, theta).
///
/// Ordering convention: 0 < m1 <= m2 and 0 <= theta <= pi/2. Inputs outside
/// the convention are rejected, never swapped. Degenerate masses are allowed;
/// theta is then physically inert but kept.
class MixingParams {
 public:
  MixingParams(double m1, double m2, double theta);

  double m1() const noexcept { return m1_; }
  double m2() const noexcept { return m2_; }
  double theta() const noexcept { return theta_; }

  /// sin(2 theta), the amplitude entering every oscillation formula.
  double sin_2theta() const noexcept;
  double sin_sq_2theta() const noexcept;

  /// Geometric mean sqrt(m1 m2), the momentum scale of k_tilde.
  double momentum_scale() const noexcept;

  MixingParams with_theta(double theta) const { return {m1_, m2_, theta}; }

 private:
  double m1_;
  double m2_;
  double theta_;
};

/// Entries of the symmetric flavor-basis mass matrix [[m_e, m_emu], [m_emu, m_mu]].
struct FlavorMasses {
  double m_e;
  double m_mu;
  double m_emu;
};

FlavorMasses derive_flavor_masses(const MixingParams& params) noexcept;

/// Eigen-decomposition of a flavor mass matrix; used to check that
/// derive_flavor_masses is invertible.
struct MassEigensystem {
  double m_light;
  double m_heavy;
  double theta;  ///< in [0, pi/2]; meaningless when m_light == m_heavy
};

MassEigensystem diagonalize(const FlavorMasses& masses) noexcept;

struct KinematicPoint {
  double k;            ///< momentum magnitude |k|
  double k_tilde;      ///< |k| / sqrt(m1 m2)
  double omega1;       ///< sqrt(k^2 + m1^2)
  double omega2;       ///< sqrt(k^2 + m2^2)
  double omega_minus;  ///< (omega2 - omega1) / 2
  double omega_plus;   ///< (omega2 + omega1) / 2
};

/// Throws DomainError if k is negative or not finite.
KinematicPoint kinematics(const MixingParams& params, double k);

/// Same as kinematics() but with the momentum given as k_tilde.
KinematicPoint kinematics_at_k_tilde(const MixingParams& params, double k_tilde);

}  // namespace nuqft
