#include "nuqft/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <thread>
#include <utility>

#include "nuqft/bogoliubov.hpp"
#include "nuqft/leggett_garg.hpp"
#include "nuqft/oscillation.hpp"
#include "nuqft/uncertainty.hpp"

namespace nuqft {

namespace {

constexpr std::array<std::pair<Axis, std::string_view>, 3> kAxisNames{{
    {Axis::k_tilde, "k_tilde"},
    {Axis::time, "time"},
    {Axis::theta, "theta"},
}};

constexpr std::array<std::pair<Quantity, std::string_view>, 4> kQuantityNames{{
    {Quantity::w_qft, "w_qft"},
    {Quantity::w_qm, "w_qm"},
    {Quantity::f_qft, "f_qft"},
    {Quantity::f_qm, "f_qm"},
}};

constexpr double kTieTolerance = 1e-15;
constexpr double kGoldenFraction = 0.3819660112501051;  // 2 - golden ratio

bool finite(double x) { return std::isfinite(x); }

}  // namespace

std::string_view to_string(Axis axis) noexcept {
  for (const auto& [value, name] : kAxisNames) {
    if (value == axis) return name;
  }
  return "?";
}

std::string_view to_string(Quantity quantity) noexcept {
  for (const auto& [value, name] : kQuantityNames) {
    if (value == quantity) return name;
  }
  return "?";
}

std::optional<Axis> parse_axis(std::string_view name) noexcept {
  if (name == "t") return Axis::time;
  for (const auto& [value, label] : kAxisNames) {
    if (label == name) return value;
  }
  return std::nullopt;
}

std::optional<Quantity> parse_quantity(std::string_view name) noexcept {
  for (const auto& [value, label] : kQuantityNames) {
    if (label == name) return value;
  }
  return std::nullopt;
}

void validate(const SweepSpec& spec) {
  if (!finite(spec.min)) throw DomainError("min", "must be finite");
  if (!finite(spec.max)) throw DomainError("max", "must be finite");
  if (!(spec.min < spec.max)) throw DomainError("min", "range requires min < max");
  if (spec.steps < 2) throw DomainError("steps", "at least 2 grid points are required");
  if (spec.spacing == Spacing::logarithmic && spec.min <= 0.0) {
    throw DomainError("min", "logarithmic spacing requires min > 0");
  }

  switch (spec.axis) {
    case Axis::k_tilde:
      if (spec.min < 0.0) throw DomainError("min", "k_tilde must be nonnegative");
      break;
    case Axis::time:
      if (spec.min < 0.0) throw DomainError("min", "time must be nonnegative");
      break;
    case Axis::theta:
      if (spec.min < 0.0 || spec.max > std::numbers::pi / 2) {
        throw DomainError("max", "theta range must lie in [0, pi/2]");
      }
      break;
  }

  // Constructing the params runs the mass/ordering checks; theta is
  // replaced by an in-range value when it is the swept coordinate.
  const double theta = spec.axis == Axis::theta ? spec.min : spec.theta;
  [[maybe_unused]] const MixingParams params(spec.m1, spec.m2, theta);

  if (spec.axis != Axis::time && (!finite(spec.t) || spec.t < 0.0)) {
    throw DomainError("t", "time must be a nonnegative finite number");
  }
  if (spec.axis != Axis::k_tilde && (!finite(spec.k_tilde) || spec.k_tilde < 0.0)) {
    throw DomainError("k_tilde", "momentum must be a nonnegative finite number");
  }
}

std::vector<double> axis_grid(const SweepSpec& spec) {
  validate(spec);
  const auto n = static_cast<std::size_t>(spec.steps);
  const double last = static_cast<double>(n - 1);
  std::vector<double> grid(n);
  if (spec.spacing == Spacing::linear) {
    const double width = spec.max - spec.min;
    for (std::size_t i = 0; i < n; ++i) {
      grid[i] = spec.min + width * (static_cast<double>(i) / last);
    }
  } else {
    const double log_min = std::log(spec.min);
    const double log_width = std::log(spec.max) - log_min;
    for (std::size_t i = 0; i < n; ++i) {
      grid[i] = std::exp(log_min + log_width * (static_cast<double>(i) / last));
    }
  }
  grid.front() = spec.min;
  grid.back() = spec.max;
  return grid;
}

EvalRecord evaluate_point(const MixingParams& params, const KinematicPoint& kin, double t) {
  if (!finite(t) || t < 0.0) throw DomainError("t", "time must be a nonnegative finite number");
  const BogoliubovPair bog = bogoliubov_pair(params, kin);
  const LGRecord lg_qft = w_qft(params, kin, bog, t);
  const LGRecord lg_qm = w_qm(params, kin, t);
  return {
      .k_tilde = kin.k_tilde,
      .k = kin.k,
      .t = t,
      .theta = params.theta(),
      .q_transition = qft_probability(params, kin, bog, t).transition,
      .p_transition = qm_probability(params, kin, t).transition,
      .w_qft = lg_qft.w_value,
      .w_qm = lg_qm.w_value,
      .f_qft = lg_qft.f_value,
      .f_qm = lg_qm.f_value,
      .c_of_t = commutator_c(params, kin, bog, t),
      .u_sq = bog.u_sq(),
      .v_sq = bog.v_sq(),
  };
}

EvalRecord evaluate_at(const SweepSpec& spec, double axis_value) {
  const double theta = spec.axis == Axis::theta ? axis_value : spec.theta;
  const double k_tilde = spec.axis == Axis::k_tilde ? axis_value : spec.k_tilde;
  const double t = spec.axis == Axis::time ? axis_value : spec.t;
  const MixingParams params(spec.m1, spec.m2, theta);
  return evaluate_point(params, kinematics_at_k_tilde(params, k_tilde), t);
}

double axis_coordinate(const EvalRecord& record, Axis axis) noexcept {
  switch (axis) {
    case Axis::k_tilde:
      return record.k_tilde;
    case Axis::time:
      return record.t;
    case Axis::theta:
      return record.theta;
  }
  return record.k_tilde;
}

double quantity_value(const EvalRecord& record, Quantity quantity) noexcept {
  switch (quantity) {
    case Quantity::w_qft:
      return record.w_qft;
    case Quantity::w_qm:
      return record.w_qm;
    case Quantity::f_qft:
      return record.f_qft;
    case Quantity::f_qm:
      return record.f_qm;
  }
  return record.w_qft;
}

std::vector<EvalRecord> run_sweep(const SweepSpec& spec, unsigned workers) {
  const std::vector<double> grid = axis_grid(spec);
  std::vector<EvalRecord> records(grid.size());

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));

  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) records[i] = evaluate_at(spec, grid[i]);
  };

  if (workers <= 1) {
    fill(0, grid.size());
    return records;
  }

  // Contiguous disjoint chunks; each thread writes only its own indices.
  const std::size_t chunk = (grid.size() + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t begin = 0; begin < grid.size(); begin += chunk) {
    pool.emplace_back(fill, begin, std::min(grid.size(), begin + chunk));
  }
  pool.clear();  // joins
  return records;
}

RefinedMaximum refine_maximum(const std::function<double(double)>& objective, Bracket start,
                              double tolerance, int max_evaluations) {
  if (!(tolerance > 0.0) || !finite(tolerance)) {
    throw DomainError("refine_tol", "tolerance must be a positive finite number");
  }
  Bracket b = start;
  int evaluations = 0;
  while (b.hi - b.lo > tolerance && evaluations < max_evaluations) {
    const double right = b.hi - b.best;
    const double left = b.best - b.lo;
    const double probe =
        right >= left ? b.best + kGoldenFraction * right : b.best - kGoldenFraction * left;
    if (probe <= b.lo || probe >= b.hi || probe == b.best) break;  // below resolution

    const double value = objective(probe);
    ++evaluations;
    if (value > b.f_best) {
      if (probe > b.best) {
        b.lo = b.best;
      } else {
        b.hi = b.best;
      }
      b.best = probe;
      b.f_best = value;
    } else if (probe > b.best) {
      b.hi = probe;
    } else {
      b.lo = probe;
    }
  }
  return {b, evaluations, b.hi - b.lo <= tolerance};
}

ExtremumReport find_maximum(const SweepSpec& spec, Quantity quantity, double refine_tol,
                            unsigned workers) {
  if (!(refine_tol > 0.0) || !finite(refine_tol)) {
    throw DomainError("refine_tol", "tolerance must be a positive finite number");
  }
  const std::vector<EvalRecord> records = run_sweep(spec, workers);

  std::vector<double> values(records.size());
  std::ranges::transform(records, values.begin(),
                         [quantity](const EvalRecord& r) { return quantity_value(r, quantity); });
  const double top = *std::ranges::max_element(values);
  const auto first_top = std::ranges::find_if(values, [top](double v) { return v >= top - kTieTolerance; });
  const auto i = static_cast<std::size_t>(first_top - values.begin());

  auto coord = [&](std::size_t j) { return axis_coordinate(records[j], spec.axis); };
  const std::size_t lo_index = i == 0 ? 0 : i - 1;
  const std::size_t hi_index = i + 1 == records.size() ? i : i + 1;
  const Bracket grid_bracket{coord(lo_index), coord(i), coord(hi_index), values[i]};

  ExtremumReport report{
      .quantity = quantity,
      .arg_at_max = grid_bracket.best,
      .max_value = grid_bracket.f_best,
      .bracket_lo = grid_bracket.lo,
      .bracket_hi = grid_bracket.hi,
      .refined = false,
      .tolerance_used = refine_tol,
      .grid_arg = grid_bracket.best,
      .grid_value = grid_bracket.f_best,
  };
  if (grid_bracket.hi - grid_bracket.lo <= refine_tol) return report;

  auto objective = [&](double x) { return quantity_value(evaluate_at(spec, x), quantity); };
  const RefinedMaximum refined = refine_maximum(objective, grid_bracket, refine_tol);
  report.arg_at_max = refined.bracket.best;
  report.max_value = refined.bracket.f_best;
  report.bracket_lo = refined.bracket.lo;
  report.bracket_hi = refined.bracket.hi;
  report.refined = true;
  return report;
}

std::vector<LimitPoint> limit_diagnostics(const MixingParams& params, double t,
                                          std::span<const double> k_tilde_list) {
  if (k_tilde_list.empty()) throw DomainError("k_tilde", "list must not be empty");
  if (!finite(t) || t < 0.0) throw DomainError("t", "time must be a nonnegative finite number");

  std::vector<LimitPoint> out;
  out.reserve(k_tilde_list.size());
  for (const double k_tilde : k_tilde_list) {
    if (!(k_tilde > 0.0) || !finite(k_tilde)) {
      throw DomainError("k_tilde", "entries must be positive and finite");
    }
    const KinematicPoint kin = kinematics_at_k_tilde(params, k_tilde);
    const BogoliubovPair bog = bogoliubov_pair(params, kin);
    const double deviation = std::abs(qft_probability(params, kin, bog, t).transition -
                                      qm_probability(params, kin, t).transition);
    const double envelope = params.sin_sq_2theta() * bog.v_sq();
    const double w_deviation =
        std::abs(w_qft(params, kin, bog, t).w_value - w_qm(params, kin, t).w_value);
    out.push_back({k_tilde, deviation, envelope, w_deviation, deviation <= envelope + 1e-12});
  }
  return out;
}

}  // namespace nuqft
