#pragma once

// Randomized identity suite. Every identity is a theorem of the implemented
// formulas; the suite evaluates both sides independently over seeded draws
// and records the worst residual against a fixed tolerance.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "nuqft/leggett_garg.hpp"
#include "nuqft/model.hpp"

namespace nuqft {

struct SampleDraw {
  MixingParams params;
  double k_tilde;
  double t;
};

/// Draws m1 in [0.1, 50], m2 in [m1, 50 m1], theta in [0, pi/2],
/// log-uniform k_tilde in [1e-3, 1e3] and t in [0, 10].
/// The sequence is a pure function of the seed.
class SampleGenerator {
 public:
  explicit SampleGenerator(std::uint64_t seed) : engine_(seed) {}

  SampleDraw next();

 private:
  double uniform01();

  std::mt19937_64 engine_;
};

struct IdentityResult {
  std::string name;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

struct VerifyConfig {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  GapPhase gap_phase = GapPhase::doubled;
};

struct VerifyOutcome {
  std::string suite;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityResult> identities;

  bool passed() const noexcept;
  const IdentityResult* find(std::string_view name) const noexcept;
};

/// Throws DomainError if samples == 0.
VerifyOutcome run_verify(const VerifyConfig& config);

void write_verify(std::ostream& out, const VerifyOutcome& outcome);

}  // namespace nuqft
