#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nuqft/cli.hpp"
#include "nuqft/report.hpp"
#include "reference_point.hpp"

using namespace nuqft;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::map<std::string, double> parse_record(const std::string& text) {
  std::map<std::string, double> values;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto colon = line.find(": ");
    REQUIRE(colon != std::string::npos);
    const auto value = parse_number(line.substr(colon + 2));
    REQUIRE(value.has_value());
    values[line.substr(0, colon)] = *value;
  }
  return values;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("nuqft-test-" + std::to_string(std::hash<const void*>{}(this)) + "-" +
             std::to_string(counter_++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::vector<EvalRecord> read_records(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return read_csv(in);
}

}  // namespace

TEST_CASE("eval at the reference point") {
  const Run r = run({"eval", "--m1", "3", "--m2", "20", "--theta", "1.0471975511965976", "--t",
                     "1", "--k-tilde", "1"});
  REQUIRE(r.status == kExitOk);
  const auto values = parse_record(r.out);
  REQUIRE(values.size() == kRecordColumns.size());
  CHECK(std::abs(values.at("w_qft") - reference::kWqft) < 1e-9);
  CHECK(std::abs(values.at("f_qft") - reference::kFqft) < 1e-9);
  CHECK(std::abs(values.at("w_qm") - reference::kWqm) < 1e-9);
  CHECK(std::abs(values.at("f_qm") - reference::kFqm) < 1e-9);
  CHECK(r.out.rfind("k_tilde: 1\nk: ", 0) == 0);

  // pi/3 token and --k give the same point.
  const Run token = run({"eval", "--m1", "3", "--m2", "20", "--theta", "pi/3", "--t", "1",
                         "--k-tilde", "1"});
  CHECK(token.out == r.out);
}

TEST_CASE("eval without mixing prints zeros") {
  const Run r = run({"eval", "--m1", "3", "--m2", "20", "--theta", "0", "--t", "5", "--k", "2"});
  REQUIRE(r.status == kExitOk);
  const auto values = parse_record(r.out);
  for (const char* key : {"q_transition", "p_transition", "w_qft", "w_qm", "f_qft", "f_qm", "c_of_t"}) {
    CHECK(values.at(key) == 0.0);
  }
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({"eval", "--m1", "3", "--m2", "20", "--theta", "0.5", "--t", "1"}).status == kExitUsage);
  CHECK(run({"eval", "--m1", "3", "--m2", "20", "--theta", "0.5", "--t", "1", "--k", "1",
             "--k-tilde", "1"})
            .status == kExitUsage);
  CHECK(run({"eval", "--m2", "20", "--theta", "0.5", "--t", "1", "--k", "1"}).status == kExitUsage);
  CHECK(run({"eval", "--m1", "3", "--m2", "20", "--theta", "pi/5", "--t", "1", "--k", "1"}).status ==
        kExitUsage);
  CHECK(run({"eval", "--m1", "30", "--m2", "20", "--theta", "0.5", "--t", "1", "--k", "1"}).status ==
        kExitUsage);
  CHECK(run({"eval", "--m1", "3", "--m2", "20", "--theta", "0.5", "--t", "-1", "--k", "1"}).status ==
        kExitUsage);
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"plot"}).status == kExitUsage);
  CHECK(run({"sweep", "--m1", "3", "--m2", "20", "--theta", "0", "--t", "1", "--steps", "1"})
            .status == kExitUsage);
  CHECK(run({"sweep", "--m1", "3", "--m2", "20", "--theta", "0", "--t", "1", "--min", "1", "--max",
             "1"})
            .status == kExitUsage);
  CHECK(run({"sweep", "--m1", "3", "--m2", "20", "--theta", "0", "--t", "1", "--log", "--linear"})
            .status == kExitUsage);
  CHECK(run({"figure", "fig9"}).status == kExitUsage);
  CHECK(run({"verify", "--samples", "0"}).status == kExitUsage);

  const Run help = run({"--help"});
  CHECK(help.status == kExitOk);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("sweep writes csv") {
  TempDir dir;
  const fs::path path = dir.path() / "zero.csv";
  const Run r = run({"sweep", "--m1", "3", "--m2", "20", "--theta", "0", "--t", "1", "--steps", "3",
                     "--out", path.string()});
  REQUIRE(r.status == kExitOk);
  const std::vector<EvalRecord> rows = read_records(path);
  REQUIRE(rows.size() == 3);
  for (const EvalRecord& row : rows) {
    CHECK(row.w_qft == 0.0);
    CHECK(row.f_qm == 0.0);
  }
  CHECK(rows.front().k_tilde == 0.05);
  CHECK(rows.back().k_tilde == 10.0);

  const Run to_stdout =
      run({"sweep", "--m1", "3", "--m2", "20", "--theta", "0", "--t", "1", "--steps", "3"});
  CHECK(to_stdout.out == slurp(path));

  const Run unwritable = run({"sweep", "--m1", "3", "--m2", "20", "--theta", "0", "--t", "1",
                              "--out", (dir.path() / "missing" / "x.csv").string()});
  CHECK(unwritable.status == kExitFailure);
  CHECK(unwritable.err.find("cannot open") != std::string::npos);
}

TEST_CASE("sweep along time needs a fixed momentum") {
  const std::vector<std::string> base{"sweep", "--axis", "time", "--m1", "3", "--m2", "20",
                                      "--theta", "pi/3", "--min", "0", "--max", "2", "--steps", "3"};
  CHECK(run(base).status == kExitUsage);
  std::vector<std::string> with_k = base;
  with_k.insert(with_k.end(), {"--k-tilde", "1"});
  const Run r = run(with_k);
  REQUIRE(r.status == kExitOk);
  std::istringstream in(r.out);
  const std::vector<EvalRecord> rows = read_csv(in);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].t == 1.0);
  CHECK(std::abs(rows[1].w_qft - reference::kWqft) < 1e-9);
}

TEST_CASE("maxima reports each quantity") {
  const Run r = run({"maxima", "--m1", "3", "--m2", "20", "--theta", "pi/3", "--t", "1",
                     "--quantity", "w_qft", "--quantity", "w_qm", "--refine-tol", "1e-10"});
  REQUIRE(r.status == kExitOk);
  CHECK(r.out.find("quantity: w_qft") != std::string::npos);
  CHECK(r.out.find("quantity: w_qm") != std::string::npos);
  CHECK(r.out.find("quantity: f_qft") == std::string::npos);

  const Run all = run({"maxima", "--m1", "3", "--m2", "40", "--theta", "pi/4", "--t", "1",
                       "--steps", "201"});
  REQUIRE(all.status == kExitOk);
  CHECK(all.out.find("quantity: f_qm") != std::string::npos);

  CHECK(run({"maxima", "--m1", "3", "--m2", "20", "--theta", "pi/3", "--t", "1", "--refine-tol",
             "0"})
            .status == kExitUsage);
  CHECK(run({"maxima", "--m1", "3", "--m2", "20", "--theta", "pi/3", "--t", "1", "--quantity",
             "w_x"})
            .status == kExitUsage);
}

TEST_CASE("figure datasets") {
  TempDir dir;
  REQUIRE(run({"figure", "all", "--out", dir.path().string(), "--workers", "4"}).status == kExitOk);

  const auto fig1 = read_records(dir.path() / "fig1.csv");
  REQUIRE(fig1.size() == 2001);
  double max_qft = -1, max_qm = -1;
  for (const EvalRecord& row : fig1) {
    max_qft = std::max(max_qft, row.w_qft);
    max_qm = std::max(max_qm, row.w_qm);
  }
  CHECK(max_qft > max_qm);
  CHECK(max_qm > 0.0);

  for (const EvalRecord& row : read_records(dir.path() / "fig3b.csv")) {
    REQUIRE(row.f_qm <= 1e-12);
    REQUIRE(row.w_qm <= 1e-12);
  }
  for (const EvalRecord& row : read_records(dir.path() / "fig2a.csv")) {
    REQUIRE(row.f_qft >= row.w_qft);
  }
  for (const char* id : {"fig2b", "fig3a"}) CHECK(fs::exists(dir.path() / (std::string(id) + ".csv")));

  TempDir again;
  REQUIRE(run({"figure", "fig1", "--out", again.path().string()}).status == kExitOk);
  CHECK(slurp(again.path() / "fig1.csv") == slurp(dir.path() / "fig1.csv"));
}

TEST_CASE("verify") {
  const Run one = run({"verify", "--samples", "1", "--seed", "42"});
  CHECK(one.status == kExitOk);
  CHECK(run({"verify", "--samples", "1", "--seed", "42"}).out == one.out);
  CHECK(one.out.find("samples: 1\nseed: 42\n") != std::string::npos);

  const Run many = run({"verify", "--samples", "10000", "--seed", "9"});
  CHECK(many.status == kExitOk);
  CHECK(many.out.find("FAIL") == std::string::npos);
  CHECK(many.out.find("result: pass") != std::string::npos);
}
