#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>

#include "nuqft/report.hpp"

using namespace nuqft;

TEST_CASE("numbers print in shortest round-trip form") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-2.5e-300) == "-2.5e-300");

  std::mt19937_64 rng(1);
  for (int i = 0; i < 100000; ++i) {
    double x;
    const std::uint64_t bits = rng();
    std::memcpy(&x, &bits, sizeof x);
    if (!std::isfinite(x)) continue;
    const auto back = parse_number(format_number(x));
    REQUIRE(back.has_value());
    REQUIRE((*back == x));
  }
}

TEST_CASE("strict number parsing") {
  CHECK(parse_number("1.5") == 1.5);
  CHECK(parse_number("-3e2") == -300.0);
  CHECK_FALSE(parse_number("").has_value());
  CHECK_FALSE(parse_number("1.5x").has_value());
  CHECK_FALSE(parse_number("pi/3").has_value());
  CHECK_FALSE(parse_number(" 1").has_value());
}

TEST_CASE("csv layout") {
  SweepSpec spec;
  spec.theta = 0;
  spec.steps = 3;
  std::ostringstream out;
  write_csv(out, run_sweep(spec));
  const std::string text = out.str();

  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.find('"') == std::string::npos);
  CHECK(text.back() == '\n');
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(text.rfind("k_tilde,k,t,theta,q_transition,p_transition,w_qft,w_qm,f_qft,f_qm,c_of_t,"
                   "u_sq,v_sq\n",
                   0) == 0);

  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 12);
    // w_qft, w_qm, f_qft, f_qm are columns 7-10.
    std::vector<std::string> cells;
    std::stringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
    for (int c = 6; c <= 9; ++c) CHECK(cells[c] == "0");
  }
}

TEST_CASE("csv round trip re-evaluates to identical values") {
  SweepSpec spec;
  spec.theta = 1.0471975511965976;
  spec.steps = 301;
  std::stringstream buffer;
  write_csv(buffer, run_sweep(spec));
  const std::vector<EvalRecord> parsed = read_csv(buffer);
  REQUIRE(parsed.size() == 301);
  for (const EvalRecord& row : parsed) {
    const MixingParams params(spec.m1, spec.m2, row.theta);
    const EvalRecord again = evaluate_point(params, kinematics_at_k_tilde(params, row.k_tilde), row.t);
    REQUIRE(again.k == row.k);
    REQUIRE(again.q_transition == row.q_transition);
    REQUIRE(again.p_transition == row.p_transition);
    REQUIRE(again.w_qft == row.w_qft);
    REQUIRE(again.w_qm == row.w_qm);
    REQUIRE(again.f_qft == row.f_qft);
    REQUIRE(again.f_qm == row.f_qm);
    REQUIRE(again.c_of_t == row.c_of_t);
    REQUIRE(again.u_sq == row.u_sq);
    REQUIRE(again.v_sq == row.v_sq);
  }
}

TEST_CASE("malformed csv is rejected") {
  std::istringstream bad_header("a,b,c\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(bad_header), std::runtime_error);

  std::ostringstream good;
  write_csv(good, std::vector<EvalRecord>{});
  std::istringstream short_row(good.str() + "1,2,3\n");
  CHECK_THROWS_AS(read_csv(short_row), std::runtime_error);
  std::istringstream junk(good.str() + "1,2,3,4,5,6,7,8,9,10,11,12,x\n");
  CHECK_THROWS_AS(read_csv(junk), std::runtime_error);
}

TEST_CASE("record and extremum text output") {
  SweepSpec spec;
  spec.theta = 0.5;
  std::ostringstream out;
  write_record(out, evaluate_at(spec, 1.0));
  const std::string text = out.str();
  std::size_t position = 0;
  for (std::string_view key : kRecordColumns) {
    const std::size_t found = text.find(std::string(key) + ": ", position);
    REQUIRE(found != std::string::npos);
    position = found;
  }

  std::ostringstream ext;
  write_extremum(ext, find_maximum(spec, Quantity::w_qft, 1e-6), Axis::k_tilde);
  CHECK(ext.str().rfind("quantity: w_qft\naxis: k_tilde\n", 0) == 0);
  CHECK(ext.str().find("refined: true") != std::string::npos);
}

TEST_CASE("figure presets") {
  REQUIRE(figure_presets().size() == 5);
  const auto fig1 = find_figure("fig1");
  REQUIRE(fig1.has_value());
  CHECK(fig1->m1 == 3);
  CHECK(fig1->m2 == 20);
  CHECK(fig1->t == 1);
  CHECK(fig1->theta == std::numbers::pi / 3);
  CHECK(fig1->quantities == std::array{Quantity::w_qft, Quantity::w_qm});

  for (std::string_view id : {"fig2a", "fig2b"}) {
    const auto preset = find_figure(id);
    REQUIRE(preset.has_value());
    CHECK(preset->m2 == 40);
    CHECK(preset->theta == std::numbers::pi / 3);
  }
  for (std::string_view id : {"fig3a", "fig3b"}) {
    const auto preset = find_figure(id);
    REQUIRE(preset.has_value());
    CHECK(preset->m2 == 40);
    CHECK(preset->theta == std::numbers::pi / 4);
  }
  CHECK(find_figure("fig2a")->quantities == std::array{Quantity::w_qft, Quantity::f_qft});
  CHECK(find_figure("fig3b")->quantities == std::array{Quantity::w_qm, Quantity::f_qm});
  CHECK_FALSE(find_figure("fig4").has_value());

  const SweepSpec grid = fig1->sweep_spec();
  CHECK(grid.steps == 2001);
  CHECK(grid.spacing == Spacing::logarithmic);
  CHECK(grid.min == 0.05);
  CHECK(grid.max == 10.0);
}
