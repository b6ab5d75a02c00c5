#include "nuqft/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "nuqft/model.hpp"
#include "nuqft/report.hpp"
#include "nuqft/sweep.hpp"
#include "nuqft/verify.hpp"

namespace nuqft {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(const CLI::Option* opt) {
  if (opt->count() == 0) throw UsageError("missing required flag " + opt->get_name());
}

// Only the two literal tokens are special; anything else is radians.
double parse_angle(const std::string& text) {
  if (text == "pi/3") return std::numbers::pi / 3;
  if (text == "pi/4") return std::numbers::pi / 4;
  if (const auto value = parse_number(text)) return *value;
  throw UsageError("--theta: expected radians, pi/3 or pi/4, got '" + text + "'");
}

struct ParamFlags {
  double m1 = 0.0;
  double m2 = 0.0;
  std::string theta;
  double t = 0.0;
  CLI::Option* m1_opt = nullptr;
  CLI::Option* m2_opt = nullptr;
  CLI::Option* theta_opt = nullptr;
  CLI::Option* t_opt = nullptr;

  void attach(CLI::App& app) {
    m1_opt = app.add_option("--m1", m1, "lighter mass, m1 > 0");
    m2_opt = app.add_option("--m2", m2, "heavier mass, m2 >= m1");
    theta_opt = app.add_option("--theta", theta, "mixing angle in radians, or pi/3, pi/4");
    t_opt = app.add_option("--t", t, "time, in inverse mass units");
  }
};

struct GridFlags {
  std::string axis = "k_tilde";
  double min = kFigureKTildeMin;
  double max = kFigureKTildeMax;
  int steps = kFigureGridSteps;
  double k_tilde = 1.0;
  unsigned workers = 1;
  CLI::Option* min_opt = nullptr;
  CLI::Option* max_opt = nullptr;
  CLI::Option* log_opt = nullptr;
  CLI::Option* linear_opt = nullptr;
  CLI::Option* k_tilde_opt = nullptr;

  void attach(CLI::App& app) {
    app.add_option("--axis", axis, "swept coordinate: k_tilde, time or theta")
        ->check(CLI::IsMember({"k_tilde", "time", "t", "theta"}));
    min_opt = app.add_option("--min", min, "lower end of the swept range");
    max_opt = app.add_option("--max", max, "upper end of the swept range");
    app.add_option("--steps", steps, "number of grid points, at least 2");
    log_opt = app.add_flag("--log", "logarithmic spacing (default on the k_tilde axis)");
    linear_opt = app.add_flag("--linear", "linear spacing (default on time and theta axes)");
    log_opt->excludes(linear_opt);
    k_tilde_opt =
        app.add_option("--k-tilde", k_tilde, "fixed k_tilde when sweeping time or theta");
    app.add_option("--workers", workers, "evaluation threads, 0 for all cores");
  }
};

SweepSpec build_spec(const ParamFlags& params, const GridFlags& grid) {
  SweepSpec spec;
  spec.axis = parse_axis(grid.axis).value();
  require(params.m1_opt);
  require(params.m2_opt);
  spec.m1 = params.m1;
  spec.m2 = params.m2;
  if (spec.axis != Axis::theta) {
    require(params.theta_opt);
    spec.theta = parse_angle(params.theta);
  }
  if (spec.axis != Axis::time) {
    require(params.t_opt);
    spec.t = params.t;
  }
  if (spec.axis != Axis::k_tilde) {
    require(grid.k_tilde_opt);
    require(grid.min_opt);
    require(grid.max_opt);
  }
  spec.min = grid.min;
  spec.max = grid.max;
  spec.steps = grid.steps;
  spec.k_tilde = grid.k_tilde;
  const bool log_by_default = spec.axis == Axis::k_tilde;
  const bool logarithmic =
      grid.log_opt->count() > 0 || (log_by_default && grid.linear_opt->count() == 0);
  spec.spacing = logarithmic ? Spacing::logarithmic : Spacing::linear;
  validate(spec);
  return spec;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file << content;
  file.close();
  if (file.fail()) throw IoError("write to '" + path.string() + "' failed");
}

std::string csv_text(std::span<const EvalRecord> records) {
  std::ostringstream buffer;
  write_csv(buffer, records);
  return buffer.str();
}

int cmd_eval(const ParamFlags& params, CLI::Option* k_opt, double k, CLI::Option* k_tilde_opt,
             double k_tilde, std::ostream& out) {
  require(params.m1_opt);
  require(params.m2_opt);
  require(params.theta_opt);
  require(params.t_opt);
  if (k_opt->count() + k_tilde_opt->count() != 1) {
    throw UsageError("exactly one of --k or --k-tilde is required");
  }
  const MixingParams mixing(params.m1, params.m2, parse_angle(params.theta));
  const KinematicPoint kin =
      k_opt->count() > 0 ? kinematics(mixing, k) : kinematics_at_k_tilde(mixing, k_tilde);
  write_record(out, evaluate_point(mixing, kin, params.t));
  return kExitOk;
}

int cmd_sweep(const SweepSpec& spec, unsigned workers, const std::string& path,
              std::ostream& out) {
  const std::string text = csv_text(run_sweep(spec, workers));
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
  return kExitOk;
}

int cmd_maxima(const SweepSpec& spec, unsigned workers, const std::vector<std::string>& names,
               double refine_tol, std::ostream& out) {
  std::vector<Quantity> quantities;
  if (names.empty()) {
    quantities = {Quantity::w_qft, Quantity::w_qm, Quantity::f_qft, Quantity::f_qm};
  }
  for (const std::string& name : names) quantities.push_back(parse_quantity(name).value());

  bool first = true;
  for (const Quantity quantity : quantities) {
    if (!first) out << '\n';
    first = false;
    write_extremum(out, find_maximum(spec, quantity, refine_tol, workers), spec.axis);
  }
  return kExitOk;
}

int cmd_figure(const std::string& id, const std::string& directory, unsigned workers,
               std::ostream& out) {
  std::vector<FigurePreset> presets;
  if (id == "all") {
    presets.assign(figure_presets().begin(), figure_presets().end());
  } else if (const auto preset = find_figure(id)) {
    presets.push_back(*preset);
  } else {
    throw UsageError("unknown figure id '" + id + "'");
  }

  const std::filesystem::path dir(directory);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());

  for (const FigurePreset& preset : presets) {
    const std::filesystem::path path = dir / (std::string(preset.id) + ".csv");
    write_file(path, csv_text(run_sweep(preset.sweep_spec(), workers)));
    out << "wrote " << path.string() << '\n';
  }
  return kExitOk;
}

int cmd_verify(std::uint64_t samples, std::uint64_t seed, std::ostream& out) {
  if (samples == 0) throw UsageError("--samples must be at least 1");
  const VerifyOutcome outcome = run_verify({.samples = samples, .seed = seed});
  write_verify(out, outcome);
  return outcome.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-flavor neutrino oscillations in QFT and QM: Leggett-Garg and uncertainty "
               "functionals",
               "nuqft"};
  app.require_subcommand(1);

  // eval
  CLI::App* eval = app.add_subcommand("eval", "evaluate every quantity at one point");
  ParamFlags eval_params;
  eval_params.attach(*eval);
  double eval_k = 0.0;
  double eval_k_tilde = 0.0;
  CLI::Option* eval_k_opt = eval->add_option("--k", eval_k, "momentum magnitude |k|");
  CLI::Option* eval_k_tilde_opt =
      eval->add_option("--k-tilde", eval_k_tilde, "momentum as |k| / sqrt(m1 m2)");
  eval_k_opt->excludes(eval_k_tilde_opt);

  // sweep
  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a one-dimensional grid to CSV");
  ParamFlags sweep_params;
  GridFlags sweep_grid;
  std::string sweep_out;
  sweep_params.attach(*sweep);
  sweep_grid.attach(*sweep);
  sweep->add_option("--out", sweep_out, "CSV output path (stdout when omitted)");

  // maxima
  CLI::App* maxima = app.add_subcommand("maxima", "locate and refine grid maxima");
  ParamFlags maxima_params;
  GridFlags maxima_grid;
  std::vector<std::string> maxima_quantities;
  double refine_tol = 1e-9;
  maxima_params.attach(*maxima);
  maxima_grid.attach(*maxima);
  maxima->add_option("--quantity", maxima_quantities, "w_qft, w_qm, f_qft or f_qm (repeatable)")
      ->check(CLI::IsMember({"w_qft", "w_qm", "f_qft", "f_qm"}));
  maxima->add_option("--refine-tol", refine_tol, "final bracket width")
      ->check(CLI::PositiveNumber);

  // figure
  CLI::App* figure = app.add_subcommand("figure", "write the CSV dataset of a figure preset");
  std::string figure_id;
  std::string figure_dir = ".";
  unsigned figure_workers = 1;
  figure->add_option("id", figure_id, "fig1, fig2a, fig2b, fig3a, fig3b or all")->required();
  figure->add_option("--out", figure_dir, "output directory");
  figure->add_option("--workers", figure_workers, "evaluation threads, 0 for all cores");

  // verify
  CLI::App* verify = app.add_subcommand("verify", "run the randomized identity suite");
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  verify->add_option("--samples", samples, "number of random draws");
  verify->add_option("--seed", seed, "random seed");

  std::vector<const char*> argv{"nuqft"};
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) {
      return cmd_eval(eval_params, eval_k_opt, eval_k, eval_k_tilde_opt, eval_k_tilde, out);
    }
    if (sweep->parsed()) {
      return cmd_sweep(build_spec(sweep_params, sweep_grid), sweep_grid.workers, sweep_out, out);
    }
    if (maxima->parsed()) {
      return cmd_maxima(build_spec(maxima_params, maxima_grid), maxima_grid.workers,
                        maxima_quantities, refine_tol, out);
    }
    if (figure->parsed()) return cmd_figure(figure_id, figure_dir, figure_workers, out);
    if (verify->parsed()) return cmd_verify(samples, seed, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace nuqft
