#pragma once

// Grid sweeps over one coordinate, extremum search and QFT/QM limit
// diagnostics. Every record is a pure function of its inputs, so sweep
// output does not depend on the number of workers.

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nuqft/model.hpp"

namespace nuqft {

enum class Axis { k_tilde, time, theta };
enum class Spacing { linear, logarithmic };
enum class Quantity { w_qft, w_qm, f_qft, f_qm };

std::string_view to_string(Axis axis) noexcept;
std::string_view to_string(Quantity quantity) noexcept;
std::optional<Axis> parse_axis(std::string_view name) noexcept;
std::optional<Quantity> parse_quantity(std::string_view name) noexcept;

struct SweepSpec {
  Axis axis = Axis::k_tilde;
  double min = 0.05;
  double max = 10.0;
  int steps = 2001;
  Spacing spacing = Spacing::logarithmic;

  // Fixed coordinates. The one named by `axis` is ignored.
  double m1 = 3.0;
  double m2 = 20.0;
  double theta = 0.0;
  double t = 1.0;
  double k_tilde = 1.0;
};

/// Throws DomainError naming the offending field.
void validate(const SweepSpec& spec);

/// Ascending axis coordinates; the endpoints are exactly `min` and `max`.
std::vector<double> axis_grid(const SweepSpec& spec);

/// Every scalar output at one (params, k, t) point.
struct EvalRecord {
  double k_tilde;
  double k;
  double t;
  double theta;
  double q_transition;
  double p_transition;
  double w_qft;
  double w_qm;
  double f_qft;
  double f_qm;
  double c_of_t;
  double u_sq;
  double v_sq;
};

EvalRecord evaluate_point(const MixingParams& params, const KinematicPoint& kin, double t);

/// Record at `axis_value` with the remaining coordinates taken from `spec`.
EvalRecord evaluate_at(const SweepSpec& spec, double axis_value);

double axis_coordinate(const EvalRecord& record, Axis axis) noexcept;
double quantity_value(const EvalRecord& record, Quantity quantity) noexcept;

/// `workers == 0` picks the hardware concurrency.
std::vector<EvalRecord> run_sweep(const SweepSpec& spec, unsigned workers = 1);

/// Three-point bracket lo <= best <= hi with f(best) >= f(lo), f(hi).
/// lo == best or best == hi is allowed for a maximum on a range boundary.
struct Bracket {
  double lo;
  double best;
  double hi;
  double f_best;
};

struct RefinedMaximum {
  Bracket bracket;
  int evaluations;
  bool converged;  ///< final width <= tolerance
};

/// Golden-section narrowing of a maximum bracket. The best point never gets
/// worse, so the result is at least the starting f_best even when the
/// objective is not unimodal inside the bracket.
RefinedMaximum refine_maximum(const std::function<double(double)>& objective, Bracket start,
                              double tolerance, int max_evaluations = 1000);

struct ExtremumReport {
  Quantity quantity;
  double arg_at_max;
  double max_value;
  double bracket_lo;
  double bracket_hi;
  bool refined;  ///< false when the grid bracket was already within tolerance
  double tolerance_used;
  // Coarse-grid maximum the refinement started from. The result is a
  // maximum relative to the grid resolution, not a certified global one.
  double grid_arg;
  double grid_value;
};

/// Grid scan for the best bracket, then golden-section refinement inside it.
/// Ties on the grid (within 1e-15) go to the smallest axis coordinate.
ExtremumReport find_maximum(const SweepSpec& spec, Quantity quantity, double refine_tol,
                            unsigned workers = 1);

struct LimitPoint {
  double k_tilde;
  double deviation;    ///< |Q_transition - P_transition|
  double envelope;     ///< sin^2(2 theta) |V_k|^2
  double w_deviation;  ///< |W_QFT - W_QM|
  bool within_envelope;
};

/// Entries of `k_tilde_list` must be positive; the list must not be empty.
std::vector<LimitPoint> limit_diagnostics(const MixingParams& params, double t,
                                          std::span<const double> k_tilde_list);

}  // namespace nuqft
