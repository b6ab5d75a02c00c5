#include "nuqft/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "nuqft/bogoliubov.hpp"
#include "nuqft/oscillation.hpp"
#include "nuqft/report.hpp"
#include "nuqft/uncertainty.hpp"

namespace nuqft {

namespace {

// Accumulates the worst residual of one identity. NaN counts as a failure.
class Tracker {
 public:
  Tracker(std::string name, double tolerance) : result_{std::move(name), 0.0, tolerance, true} {}

  void observe(double residual) {
    if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
    result_.worst_residual = std::max(result_.worst_residual, residual);
  }

  IdentityResult finish() const {
    IdentityResult r = result_;
    r.passed = r.worst_residual <= r.tolerance;
    return r;
  }

 private:
  IdentityResult result_;
};

double excess(double value, double bound) { return std::max(0.0, value - bound); }

}  // namespace

double SampleGenerator::uniform01() {
  // 53 random mantissa bits -> [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

SampleDraw SampleGenerator::next() {
  const double m1 = 0.1 + 49.9 * uniform01();
  const double m2 = m1 * (1.0 + 49.0 * uniform01());
  const double theta = (std::numbers::pi / 2) * uniform01();
  const double k_tilde = std::pow(10.0, -3.0 + 6.0 * uniform01());
  const double t = 10.0 * uniform01();
  return {MixingParams(m1, m2, theta), k_tilde, t};
}

bool VerifyOutcome::passed() const noexcept {
  return std::ranges::all_of(identities, [](const IdentityResult& r) { return r.passed; });
}

const IdentityResult* VerifyOutcome::find(std::string_view name) const noexcept {
  const auto it = std::ranges::find(identities, name, &IdentityResult::name);
  return it == identities.end() ? nullptr : &*it;
}

VerifyOutcome run_verify(const VerifyConfig& config) {
  if (config.samples == 0) throw DomainError("samples", "at least one sample is required");

  Tracker flavor_eigen("flavor_masses_eigenvalues", 1e-10);
  Tracker flavor_angle("flavor_masses_mixing_angle", 1e-10);
  Tracker kin_identity("kinematic_energy_identity", 1e-12);
  Tracker normalization("bogoliubov_normalization", 1e-12);
  Tracker v_bound("bogoliubov_v_sq_at_most_half", 1e-12);
  Tracker proximity("qft_qm_proximity", 1e-12);
  Tracker qm_limit("commutator_qm_limit", 1e-12);
  Tracker f_qft_pos("f_qft_positivity", 1e-12);
  Tracker f_qm_pos("f_qm_positivity", 1e-12);
  Tracker f_qm_sat("f_qm_saturation", 1e-12);
  Tracker qm_gap("qm_gap_identity", 1e-12);
  Tracker qft_gap("qft_gap_identity", 1e-10);
  Tracker qft_gap_pos("qft_gap_nonnegative", 1e-12);
  Tracker gap_forms("qft_gap_forms_agree", 1e-12);
  Tracker bound_qft("w_qft_upper_bound", 1e-12);
  Tracker bound_qm("w_qm_upper_bound", 1e-12);

  constexpr std::array<double, 3> kSaturationAngles{0.0, std::numbers::pi / 4,
                                                     std::numbers::pi / 2};

  SampleGenerator generator(config.seed);
  for (std::uint64_t n = 0; n < config.samples; ++n) {
    const SampleDraw draw = generator.next();
    const MixingParams& params = draw.params;
    const double t = draw.t;
    const double s2 = params.sin_sq_2theta();

    const FlavorMasses flavor = derive_flavor_masses(params);
    const MassEigensystem eigen = diagonalize(flavor);
    flavor_eigen.observe(std::max(std::abs(eigen.m_light - params.m1()) / params.m1(),
                                  std::abs(eigen.m_heavy - params.m2()) / params.m2()));
    if (params.m2() > params.m1()) flavor_angle.observe(std::abs(eigen.theta - params.theta()));

    const KinematicPoint kin = kinematics_at_k_tilde(params, draw.k_tilde);
    const double product = kin.omega1 * kin.omega2;
    kin_identity.observe(std::abs(kin.omega_plus * kin.omega_plus -
                                  kin.omega_minus * kin.omega_minus - product) /
                         product);

    const BogoliubovPair bog = bogoliubov_pair(params, kin);
    normalization.observe(std::abs(bog.u_sq() + bog.v_sq() - 1.0));
    v_bound.observe(excess(bog.v_sq(), 0.5));

    const double q_t = qft_probability(params, kin, bog, t).transition;
    const double p_t = qm_probability(params, kin, t).transition;
    const double p_2t = qm_probability(params, kin, 2.0 * t).transition;
    proximity.observe(excess(std::abs(q_t - p_t), s2 * bog.v_sq()));

    const double c = commutator_c(params, kin, bog, t);
    qm_limit.observe(excess(std::abs(c * c - p_2t), 4.0 * s2 * bog.v_sq()));

    const LGRecord lg_qft = w_qft(params, kin, bog, t);
    const LGRecord lg_qm = w_qm(params, kin, t);
    f_qft_pos.observe(excess(-lg_qft.f_value, 0.0));
    f_qm_pos.observe(excess(-lg_qm.f_value, 0.0));
    for (const double angle : kSaturationAngles) {
      const MixingParams saturated = params.with_theta(angle);
      f_qm_sat.observe(std::abs(f_qm(saturated, kin, t).f_value));
    }

    qm_gap.observe(std::abs(lg_qm.f_value - lg_qm.w_value - 0.75 * p_2t));

    // F - W is formed by subtracting two O(1) numbers, so the relative
    // residual is measured against the larger of the gap and the operands.
    const double closed = qft_gap_closed_form(params, kin, bog, t, config.gap_phase);
    const double direct = lg_qft.f_value - lg_qft.w_value;
    const double scale =
        std::max({std::abs(closed), std::abs(lg_qft.f_value) + std::abs(lg_qft.w_value),
                  std::numeric_limits<double>::min()});
    qft_gap.observe(std::abs(direct - closed) / scale);
    qft_gap_pos.observe(excess(-closed, 0.0));
    gap_forms.observe(std::abs(qft_gap_expanded_form(params, kin, bog, t) -
                               qft_gap_closed_form(params, kin, bog, t)));

    bound_qft.observe(excess(lg_qft.w_value, lg_qft.f_value));
    bound_qm.observe(excess(lg_qm.w_value, lg_qm.f_value));
  }

  VerifyOutcome outcome{"identities", config.samples, config.seed, {}};
  for (const Tracker* tracker :
       {&flavor_eigen, &flavor_angle, &kin_identity, &normalization, &v_bound, &proximity,
        &qm_limit, &f_qft_pos, &f_qm_pos, &f_qm_sat, &qm_gap, &qft_gap, &qft_gap_pos,
        &gap_forms, &bound_qft, &bound_qm}) {
    outcome.identities.push_back(tracker->finish());
  }
  return outcome;
}

void write_verify(std::ostream& out, const VerifyOutcome& outcome) {
  out << "suite: " << outcome.suite << '\n'
      << "samples: " << outcome.samples << '\n'
      << "seed: " << outcome.seed << '\n';
  for (const IdentityResult& r : outcome.identities) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " worst=" << format_number(r.worst_residual)
        << " tol=" << format_number(r.tolerance) << '\n';
  }
  out << "result: " << (outcome.passed() ? "pass" : "fail") << '\n';
}

}  // namespace nuqft
