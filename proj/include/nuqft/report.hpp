#pragma once

// Serialization of evaluation records and the figure presets.
//
// CSV layout: UTF-8, comma separated, one header row, LF line endings and
// numeric-only payload (no quoting). Numbers use the shortest decimal form
// that parses back to the identical double.

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nuqft/sweep.hpp"

namespace nuqft {

inline constexpr std::array<std::string_view, 13> kRecordColumns{
    "k_tilde", "k",   "t",     "theta", "q_transition", "p_transition", "w_qft",
    "w_qm",    "f_qft", "f_qm", "c_of_t", "u_sq",        "v_sq"};

/// Shortest round-trip decimal; negative zero prints as "0".
std::string format_number(double value);

/// Strict full-string parse; std::nullopt on any trailing garbage.
std::optional<double> parse_number(std::string_view text) noexcept;

void write_csv(std::ostream& out, std::span<const EvalRecord> records);

/// Throws std::runtime_error on a malformed header or row.
std::vector<EvalRecord> read_csv(std::istream& in);

/// `key: value` lines in kRecordColumns order.
void write_record(std::ostream& out, const EvalRecord& record);

void write_extremum(std::ostream& out, const ExtremumReport& report, Axis axis);

// Default k_tilde grid for figure reproduction.
inline constexpr double kFigureKTildeMin = 0.05;
inline constexpr double kFigureKTildeMax = 10.0;
inline constexpr int kFigureGridSteps = 2001;

struct FigurePreset {
  std::string_view id;
  double m1;
  double m2;
  double theta;
  double t;
  std::array<Quantity, 2> quantities;

  /// Default logarithmic k_tilde grid at this preset's parameters.
  SweepSpec sweep_spec() const;
};

std::span<const FigurePreset> figure_presets() noexcept;
std::optional<FigurePreset> find_figure(std::string_view id) noexcept;

}  // namespace nuqft
