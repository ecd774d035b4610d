#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "exlab/scenario.hpp"

using namespace exlab;

namespace {

Json oscillator_json() {
  return Json::parse(R"({
    "schema": 1,
    "system": {"kind": "oscillator", "fock_cutoff": 40, "m": 1.0, "omega": 1.0},
    "hamiltonian": "oscillator",
    "state": {"preset": "coherent", "alpha": 1.0},
    "observables": ["q", "p", "energy"],
    "time": {"t0": 0.0, "t1": 6.0, "steps": 120},
    "kappa": 1.0
  })");
}

std::string temp_dir(const std::string& leaf) {
  const auto dir = std::filesystem::temp_directory_path() / "exlab_test" / leaf;
  std::filesystem::remove_all(dir);
  return dir.string();
}

}  // namespace

TEST_CASE("oscillator scenario parses with presets resolved") {
  const Scenario sc = parse_scenario(oscillator_json());
  CHECK(sc.kind == "oscillator");
  CHECK(sc.dim == 40);
  CHECK(sc.observables.size() == 3);
  CHECK(sc.split.has_value());
  CHECK(max_abs(sc.split->h1) == 0.0);  // defaults to the schroedinger split
  CHECK(sc.resolved["system"]["dim"] == 40);
}

TEST_CASE("unknown keys are rejected with their path") {
  Json j = oscillator_json();
  j["system"]["typo_key"] = 3;
  try {
    parse_scenario(j);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("scenario.system.typo_key") != std::string::npos);
  }
  Json j2 = oscillator_json();
  j2["colour"] = "green";
  CHECK_THROWS_AS(parse_scenario(j2), std::invalid_argument);
}

TEST_CASE("schema and consistency violations are rejected") {
  Json j = oscillator_json();
  j["schema"] = 2;
  CHECK_THROWS_AS(parse_scenario(j), std::invalid_argument);

  Json j2 = oscillator_json();
  j2["system"]["omega"] = -1.0;
  CHECK_THROWS_AS(parse_scenario(j2), std::invalid_argument);

  Json j3 = oscillator_json();
  j3["split"] = Json{{"h1", "oscillator"}, {"h2", "oscillator"}};  // h1+h2 != H
  CHECK_THROWS_AS(parse_scenario(j3), std::invalid_argument);

  Json j4 = oscillator_json();
  j4["state"] = Json{{"preset", "coherent"}, {"alpha", 9.0}};  // tail too large
  CHECK_THROWS_AS(parse_scenario(j4), std::invalid_argument);

  Json j5 = oscillator_json();
  j5["time"]["t1"] = -1.0;
  CHECK_THROWS_AS(parse_scenario(j5), std::invalid_argument);

  Json j6 = oscillator_json();
  j6["time"]["steps"] = 2.5;
  CHECK_THROWS_AS(parse_scenario(j6), std::invalid_argument);

  Json j7 = oscillator_json();
  j7["system"] = Json{{"kind", "spin"}, {"dim", 2}, {"m", 1.0}};  // m is not a spin key
  CHECK_THROWS_AS(parse_scenario(j7), std::invalid_argument);
}

TEST_CASE("splits are expressible with presets") {
  Json j = oscillator_json();
  j["split"] = Json{{"h1", "oscillator"}, {"h2", "zero"}};  // heisenberg split
  const Scenario sc = parse_scenario(j);
  CHECK(max_abs(sc.split->h2) == 0.0);
  CHECK(deviation(sc.split->h1, sc.hamiltonian) == 0.0);
}

TEST_CASE("custom systems take explicit matrices") {
  const Json j = Json::parse(R"({
    "schema": 1,
    "system": {"kind": "custom", "dim": 2},
    "hamiltonian": [[[0.5, 0], [0, 0]], [[0, 0], [-0.5, 0]]],
    "state": {"vector": [[0.70710678118654752, 0], [0.70710678118654752, 0]]},
    "observables": [{"name": "mx", "matrix": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]}],
    "time": {"t0": 0.0, "t1": 1.0, "steps": 4}
  })");
  const Scenario sc = parse_scenario(j);
  CHECK(sc.dim == 2);
  CHECK(sc.observables[0].first == "mx");
  CHECK(is_hermitian(sc.hamiltonian));
}

TEST_CASE("simulate writes trajectory, worldtube and manifest") {
  const Scenario sc = parse_scenario(oscillator_json());
  const std::string out = temp_dir("osc");
  const SimulateResult result = run_simulate(sc, out);
  REQUIRE(std::filesystem::exists(result.trajectory_path));
  REQUIRE(std::filesystem::exists(result.worldtube_path));
  REQUIRE(std::filesystem::exists(result.manifest_path));

  const std::string csv = read_text_file(result.trajectory_path);
  CHECK(csv.rfind("t,q_re,q_im,q_sigma,p_re,p_im,p_sigma,energy_re,energy_im,energy_sigma\n", 0) == 0);
  // 120 steps -> 121 rows + header
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 122);

  // <q>_t follows the classical cosine for a coherent state
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  const double amp = std::sqrt(2.0 * hbar() / (1.0 * 1.0)) * 1.0;
  while (std::getline(lines, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double t, q_re;
    row >> t >> q_re;
    REQUIRE(std::abs(q_re - amp * std::cos(t)) < 1e-6);
  }

  const Json manifest = Json::parse(read_text_file(result.manifest_path));
  CHECK(manifest["outputs"]["trajectory"] == "trajectory.csv");
  CHECK(manifest["outputs"]["worldtube"] == "worldtube.csv");
  CHECK(manifest["scenario"]["system"]["kind"] == "oscillator");
}

TEST_CASE("spin precession matches the analytic cosine") {
  const Json j = Json::parse(R"({
    "schema": 1,
    "system": {"kind": "spin", "dim": 2},
    "hamiltonian": "sz/2",
    "state": {"preset": "plus"},
    "observables": ["sx"],
    "time": {"t0": 0.0, "t1": 6.28, "steps": 100}
  })");
  const Scenario sc = parse_scenario(j);
  const std::string out = temp_dir("spin");
  run_simulate(sc, out);
  const std::string csv = read_text_file(out + "/trajectory.csv");
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double t, sx_re;
    row >> t >> sx_re;
    REQUIRE(std::abs(sx_re - std::cos(t)) < 1e-10);
  }
  // no position observable -> no worldtube file, manifest says so
  CHECK(!std::filesystem::exists(out + "/worldtube.csv"));
  const Json manifest = Json::parse(read_text_file(out + "/manifest.json"));
  CHECK(manifest["outputs"]["worldtube"].is_null());
}

TEST_CASE("zero-length time window gives a single row") {
  Json j = oscillator_json();
  j["time"] = Json{{"t0", 2.0}, {"t1", 2.0}, {"steps", 50}};
  const Scenario sc = parse_scenario(j);
  const std::string out = temp_dir("point");
  run_simulate(sc, out);
  const std::string csv = read_text_file(out + "/trajectory.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);  // header + one row
  CHECK(csv.find("\n2,") != std::string::npos);
}

TEST_CASE("ground state preset takes the lowest eigenvector of H") {
  Json j = oscillator_json();
  j["state"] = Json{{"preset", "ground"}};
  const Scenario sc = parse_scenario(j);
  const CMatrix h = oscillator_hamiltonian(40, {1.0, 1.0});
  const double energy = expectation(*sc.state, h).real();
  CHECK(energy == Catch::Approx(0.5 * hbar()).margin(1e-10));
}
