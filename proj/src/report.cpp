#include "nuqft/report.hpp"

#include <charconv>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace nuqft {

namespace {

constexpr std::array<FigurePreset, 5> kPresets{{
    {"fig1", 3.0, 20.0, std::numbers::pi / 3, 1.0, {Quantity::w_qft, Quantity::w_qm}},
    {"fig2a", 3.0, 40.0, std::numbers::pi / 3, 1.0, {Quantity::w_qft, Quantity::f_qft}},
    {"fig2b", 3.0, 40.0, std::numbers::pi / 3, 1.0, {Quantity::w_qm, Quantity::f_qm}},
    {"fig3a", 3.0, 40.0, std::numbers::pi / 4, 1.0, {Quantity::w_qft, Quantity::f_qft}},
    {"fig3b", 3.0, 40.0, std::numbers::pi / 4, 1.0, {Quantity::w_qm, Quantity::f_qm}},
}};

std::array<double, 13> record_fields(const EvalRecord& r) {
  return {r.k_tilde, r.k,    r.t,     r.theta,  r.q_transition, r.p_transition, r.w_qft,
          r.w_qm,    r.f_qft, r.f_qm, r.c_of_t, r.u_sq,         r.v_sq};
}

EvalRecord record_from_fields(const std::array<double, 13>& f) {
  return {f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7], f[8], f[9], f[10], f[11], f[12]};
}

std::string header_line() {
  std::string line;
  for (std::size_t i = 0; i < kRecordColumns.size(); ++i) {
    if (i != 0) line += ',';
    line += kRecordColumns[i];
  }
  return line;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";
  std::array<char, 32> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return {buffer.data(), end};
}

std::optional<double> parse_number(std::string_view text) noexcept {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
  return value;
}

void write_csv(std::ostream& out, std::span<const EvalRecord> records) {
  out << header_line() << '\n';
  for (const EvalRecord& record : records) {
    const auto fields = record_fields(record);
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i != 0) out << ',';
      out << format_number(fields[i]);
    }
    out << '\n';
  }
}

std::vector<EvalRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != header_line()) {
    throw std::runtime_error("csv: unexpected header");
  }
  std::vector<EvalRecord> records;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    std::array<double, 13> fields{};
    std::size_t column = 0;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view cell =
          std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos
                                                                           : comma - start);
      const auto value = parse_number(cell);
      if (!value || column >= fields.size()) {
        throw std::runtime_error("csv: malformed row at line " + std::to_string(line_number));
      }
      fields[column++] = *value;
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (column != fields.size()) {
      throw std::runtime_error("csv: wrong column count at line " + std::to_string(line_number));
    }
    records.push_back(record_from_fields(fields));
  }
  return records;
}

void write_record(std::ostream& out, const EvalRecord& record) {
  const auto fields = record_fields(record);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out << kRecordColumns[i] << ": " << format_number(fields[i]) << '\n';
  }
}

void write_extremum(std::ostream& out, const ExtremumReport& report, Axis axis) {
  out << "quantity: " << to_string(report.quantity) << '\n'
      << "axis: " << to_string(axis) << '\n'
      << "arg_at_max: " << format_number(report.arg_at_max) << '\n'
      << "max_value: " << format_number(report.max_value) << '\n'
      << "bracket_lo: " << format_number(report.bracket_lo) << '\n'
      << "bracket_hi: " << format_number(report.bracket_hi) << '\n'
      << "refined: " << (report.refined ? "true" : "false") << '\n'
      << "tolerance_used: " << format_number(report.tolerance_used) << '\n'
      << "grid_arg: " << format_number(report.grid_arg) << '\n'
      << "grid_value: " << format_number(report.grid_value) << '\n';
}

SweepSpec FigurePreset::sweep_spec() const {
  return {
      .axis = Axis::k_tilde,
      .min = kFigureKTildeMin,
      .max = kFigureKTildeMax,
      .steps = kFigureGridSteps,
      .spacing = Spacing::logarithmic,
      .m1 = m1,
      .m2 = m2,
      .theta = theta,
      .t = t,
      .k_tilde = 1.0,
  };
}

std::span<const FigurePreset> figure_presets() noexcept { return kPresets; }

std::optional<FigurePreset> find_figure(std::string_view id) noexcept {
  for (const FigurePreset& preset : kPresets) {
    if (preset.id == id) return preset;
  }
  return std::nullopt;
}

}  // namespace nuqft
