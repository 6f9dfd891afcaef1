#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "config.hpp"
#include "jobs.hpp"

using namespace phaseshift;
using namespace phaseshift::cli;
using nlohmann::json;

namespace {

json barrier_doc(const std::string& command) {
  return json::parse(R"({
    "command": ")" + command + R"(",
    "k": [1.0],
    "lambda": [0.1, 0.05],
    "max_order": 4,
    "grid": {"x_max": 5.0, "n_points": 4001},
    "V": {"kind": "piecewise_constant", "segments": []},
    "U": {"kind": "piecewise_constant", "segments": [[0.0, 1.0, 1.0]]}
  })");
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

JobConfig random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 2.0);
  std::uniform_int_distribution<int> order(1, 20);
  std::uniform_int_distribution<int> coin(0, 1);
  JobConfig c;
  c.command = static_cast<Command>(std::uniform_int_distribution<int>(0, 3)(rng));
  c.k = {{u(rng), u(rng)}, true};
  if (coin(rng)) c.k = {{u(rng)}, false};
  const double l = u(rng) * 0.1;
  c.lambda = {{2 * l, l}, true};
  c.max_order = order(rng);
  c.grid = {6.0, 2 * static_cast<std::size_t>(std::uniform_int_distribution<int>(5, 500)(rng)) + 1};
  c.V = PotentialSpec(GaussianSum{{{u(rng), 0.1 * u(rng), u(rng) - 1.0}}});
  c.U = PotentialSpec(PiecewiseConstant{{{0.1 * u(rng), 2.0 + u(rng), u(rng)}}});
  if (coin(rng)) {
    const Grid g = c.grid.grid();
    std::vector<double> samples(g.n_points(), 0.0);
    for (std::size_t i = 0; i < g.n_points() / 2; ++i) samples[i] = u(rng);
    c.U = PotentialSpec(Tabulated{g, samples});
  }
  if (coin(rng)) c.output_path = "out.csv";
  if (coin(rng)) c.tolerances.tol_wronskian = 1e-9 * u(rng);
  return c;
}

int run_doc(const json& doc, std::string& out, std::string& log, RunOptions options = {}) {
  std::ostringstream o, l;
  const int code = run(parse_config(doc), options, o, l);
  out = o.str();
  log = l.str();
  return code;
}

}  // namespace

TEST_CASE("config round trip") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const JobConfig c = random_config(rng);
    const json doc = to_json(c);
    const JobConfig back = parse_config(doc);
    CHECK(back == c);
    CHECK(to_json(back) == doc);
  }
}

TEST_CASE("invalid configs are rejected") {
  auto rejects = [](json doc) { CHECK_THROWS_AS(parse_config(doc), ConfigError); };
  json d = barrier_doc("phases");
  d["grid"]["n_points"] = 4000;
  rejects(d);
  d = barrier_doc("phases");
  d["max_order"] = 21;
  rejects(d);
  d = barrier_doc("phases");
  d["k"] = -1.0;
  rejects(d);
  d = barrier_doc("phases");
  d.erase("U");
  rejects(d);
  d = barrier_doc("phases");
  d["U"]["kind"] = "coulomb";
  rejects(d);
  d = barrier_doc("phases");
  d["U"]["segments"] = json::parse("[[0.0, 7.0, 1.0]]");
  rejects(d);
  d = barrier_doc("converge");
  d["lambda"] = json::parse("[0.1, 0.06]");
  rejects(d);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("phases with U = 0 has zero corrections") {
  json d = barrier_doc("phases");
  d["U"] = json::parse(R"({"kind": "piecewise_constant", "segments": []})");
  d["k"] = json::parse("[0.5, 1.0, 2.0]");
  std::string out, log;
  REQUIRE(run_doc(d, out, log) == kSuccess);
  const auto rows = parse_csv(out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"k", "delta0", "delta1", "delta2", "delta3", "delta4", "divergence_flag"});
  for (std::size_t r = 1; r < rows.size(); ++r) {
    for (std::size_t c = 2; c <= 5; ++c) CHECK(rows[r][c] == "0");
    CHECK(rows[r][6] == "0");
  }
}

TEST_CASE("phases reports the barrier corrections with 12 significant digits") {
  std::string out, log;
  REQUIRE(run_doc(barrier_doc("phases"), out, log) == kSuccess);
  const auto rows = parse_csv(out);
  CHECK(rows[1][2] == "-0.545351286587");

  std::string deg;
  RunOptions o;
  o.degrees = true;
  REQUIRE(run_doc(barrier_doc("phases"), deg, log, o) == kSuccess);
  CHECK(std::stod(parse_csv(deg)[1][2]) == doctest::Approx(-0.545351286587 * 180.0 / M_PI).epsilon(1e-11));
}

TEST_CASE("sweep remainders fall with truncation order") {
  std::string out, log;
  REQUIRE(run_doc(barrier_doc("sweep"), out, log) == kSuccess);
  const auto rows = parse_csv(out);
  REQUIRE(rows.size() == 3);
  const auto& header = rows[0];
  const auto col = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
  };
  REQUIRE(col("remainder4") < header.size());
  CHECK(rows[1][col("lambda")] == "0.1");
  CHECK(std::abs(std::stod(rows[1][col("remainder4")])) < std::abs(std::stod(rows[1][col("remainder1")])));
}

TEST_CASE("converge reports order estimates") {
  std::string out, log;
  REQUIRE(run_doc(barrier_doc("converge"), out, log) == kSuccess);
  const auto rows = parse_csv(out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[1][8] == "PASS");
  CHECK(rows[2][8] == "PASS");
}

TEST_CASE("output is deterministic and honours output paths") {
  const std::string path = "phaseshift_cli_test_output.csv";
  json d = barrier_doc("sweep");
  d["output_path"] = path;
  std::string out, log;
  REQUIRE(run_doc(d, out, log) == kSuccess);
  CHECK(out.empty());
  auto slurp = [&] {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string first = slurp();
  REQUIRE(run_doc(d, out, log) == kSuccess);
  CHECK(slurp() == first);
  CHECK(!first.empty());
  std::remove(path.c_str());
}

TEST_CASE("computation failures map to exit status 1") {
  json d = barrier_doc("phases");
  d["tolerances"] = json::parse(R"({"tol_wronskian": 1e-40})");
  d["V"] = json::parse(R"({"kind": "piecewise_constant", "segments": [[0.0, 1.0, 0.3]]})");
  std::string out, log;
  CHECK(run_doc(d, out, log) == kComputationFailed);
  CHECK(log.find("WronskianViolation") != std::string::npos);
}

TEST_CASE("selftest passes on the shipped default config") {
  JobConfig c = load_config(PHASESHIFT_DEFAULT_CONFIG);
  c.command = Command::Selftest;
  std::ostringstream o, l;
  CHECK(run(c, {}, o, l) == kSuccess);
  CHECK(o.str().find("FAIL") == std::string::npos);
  CHECK(l.str().find(" 0 FAIL") != std::string::npos);
}

TEST_CASE("number formatting") {
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(1e-20) == "1e-20");
}
