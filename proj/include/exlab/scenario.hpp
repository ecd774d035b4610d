#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "exlab/common.hpp"
#include "exlab/density.hpp"
#include "exlab/dynamics.hpp"
#include "exlab/operators.hpp"
#include "exlab/serialize.hpp"
#include "exlab/worldtube.hpp"

// Scenario files drive the simulate subcommand. Schema (version 1):
//
// {
//   "schema": 1,
//   "hbar": 1.0,                                    // optional
//   "system": {"kind": "oscillator", "fock_cutoff": 40, "m": 1.0, "omega": 1.0}
//           | {"kind": "spin", "dim": 2}
//           | {"kind": "custom", "dim": 4},
//   "hamiltonian": "oscillator" | "sx" | "sy" | "sz" | "sz/2" | [[...]],
//   "split": {"h1": <matrix|preset>, "h2": <matrix|preset>},  // optional
//   "state": {"preset": "ground"}
//          | {"preset": "coherent", "alpha": 0.7}             // or [re, im]
//          | {"preset": "maximally_mixed"} | {"preset": "plus"}
//          | {"vector": [...]} | {"matrix": [[...]]},
//   "observables": ["q", "p", "n", "energy", "sx", "sy", "sz",
//                   {"name": "...", "matrix": [[...]]}],
//   "time": {"t0": 0.0, "t1": 10.0, "steps": 200},
//   "kappa": 1.0                                    // optional, default 1
// }
//
// Unknown keys anywhere are errors; messages carry the offending field path.

namespace exlab {

struct Scenario {
  std::string kind;  // spin | oscillator | custom
  Eigen::Index dim = 0;
  OscillatorParams osc;
  double hbar_value = 1.0;
  CMatrix hamiltonian;
  std::optional<GaugeSplit> split;
  std::optional<Density> state;
  std::vector<NamedQuantity> observables;
  double t0 = 0.0, t1 = 0.0;
  int steps = 0;
  double kappa = 1.0;
  Json resolved;  // echo of the fully resolved configuration
};

namespace detail {

inline void check_keys(const Json& j, const std::set<std::string>& allowed,
                       const std::string& path) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key))
      bad_field(path + "." + key, "unknown key");
}

inline double number_field(const Json& j, const std::string& key,
                           const std::string& path, double fallback,
                           bool required = false) {
  if (!j.contains(key)) {
    if (required) bad_field(path + "." + key, "missing");
    return fallback;
  }
  if (!j[key].is_number()) bad_field(path + "." + key, "expected a number");
  return j[key].get<double>();
}

inline CMatrix named_operator(const std::string& name, const Scenario& sc,
                              const std::string& path) {
  if (name == "zero") return CMatrix::Zero(sc.dim, sc.dim);
  if (sc.kind == "oscillator") {
    if (name == "q") return position_op(sc.dim, sc.osc);
    if (name == "p") return momentum_op(sc.dim, sc.osc);
    if (name == "n") return number_op(sc.dim);
    if (name == "oscillator" || name == "energy" || name == "h")
      return oscillator_hamiltonian(sc.dim, sc.osc);
  }
  if (sc.dim == 2) {
    if (name == "sx") return pauli_x();
    if (name == "sy") return pauli_y();
    if (name == "sz") return pauli_z();
    if (name == "sz/2") return 0.5 * pauli_z();
    if (name == "sx/2") return 0.5 * pauli_x();
  }
  if (name == "identity") return identity(sc.dim);
  if (name == "energy" || name == "h") return sc.hamiltonian;
  bad_field(path, "unknown operator preset '" + name + "' for kind " + sc.kind);
}

inline CMatrix operator_field(const Json& j, const Scenario& sc,
                              const std::string& path) {
  CMatrix m;
  if (j.is_string())
    m = named_operator(j.get<std::string>(), sc, path);
  else
    m = matrix_from_json(j, path);
  if (m.rows() != sc.dim)
    bad_field(path, "dimension " + std::to_string(m.rows()) +
                        " does not match system dimension " +
                        std::to_string(sc.dim));
  return m;
}

inline Density state_field(const Json& j, const Scenario& sc,
                           const std::string& path) {
  if (!j.is_object()) bad_field(path, "expected an object");
  if (j.contains("preset")) {
    check_keys(j, {"preset", "alpha"}, path);
    const std::string preset = j["preset"].get<std::string>();
    if (preset == "maximally_mixed") return Density::maximally_mixed(sc.dim);
    if (preset == "ground") {
      Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(sc.hamiltonian));
      return Density::pure(es.eigenvectors().col(0));
    }
    if (preset == "plus") {
      if (sc.dim != 2) bad_field(path, "preset 'plus' needs dimension 2");
      return Density::pure(plus_vector());
    }
    if (preset == "coherent") {
      if (sc.kind != "oscillator")
        bad_field(path, "preset 'coherent' needs an oscillator system");
      Complex alpha(0.0, 0.0);
      if (!j.contains("alpha")) bad_field(path + ".alpha", "missing");
      if (j["alpha"].is_number())
        alpha = Complex(j["alpha"].get<double>(), 0.0);
      else if (j["alpha"].is_array() && j["alpha"].size() == 2)
        alpha = Complex(j["alpha"][0].get<double>(), j["alpha"][1].get<double>());
      else
        bad_field(path + ".alpha", "expected a number or [re, im]");
      return coherent_state(alpha, sc.dim);
    }
    bad_field(path + ".preset", "unknown preset '" + preset + "'");
  }
  if (j.contains("vector")) {
    check_keys(j, {"vector"}, path);
    const CVector v = vector_from_json(j["vector"], path + ".vector");
    if (v.size() != sc.dim) bad_field(path + ".vector", "dimension mismatch");
    return Density::pure(v);
  }
  if (j.contains("matrix")) {
    check_keys(j, {"matrix"}, path);
    const CMatrix m = matrix_from_json(j["matrix"], path + ".matrix");
    if (m.rows() != sc.dim) bad_field(path + ".matrix", "dimension mismatch");
    return Density(m);
  }
  bad_field(path, "expected {preset}, {vector} or {matrix}");
}

}  // namespace detail

inline Scenario parse_scenario(const Json& j) {
  Scenario sc;
  if (!j.is_object()) detail::bad_field("scenario", "expected an object");
  detail::check_keys(j, {"schema", "hbar", "system", "hamiltonian", "split",
                         "state", "observables", "time", "kappa"},
                     "scenario");
  if (!j.contains("schema") || !j["schema"].is_number_integer() ||
      j["schema"].get<int>() != 1)
    detail::bad_field("scenario.schema", "expected the integer 1");

  sc.hbar_value = detail::number_field(j, "hbar", "scenario", 1.0);
  if (!(sc.hbar_value > 0.0)) detail::bad_field("scenario.hbar", "must be positive");
  set_hbar(sc.hbar_value);

  if (!j.contains("system")) detail::bad_field("scenario.system", "missing");
  const Json& sys = j["system"];
  if (!sys.contains("kind")) detail::bad_field("scenario.system.kind", "missing");
  sc.kind = sys["kind"].get<std::string>();
  if (sc.kind == "oscillator") {
    detail::check_keys(sys, {"kind", "fock_cutoff", "m", "omega"},
                       "scenario.system");
    sc.dim = static_cast<Eigen::Index>(
        detail::number_field(sys, "fock_cutoff", "scenario.system", 40));
    sc.osc.mass = detail::number_field(sys, "m", "scenario.system", 1.0);
    sc.osc.omega = detail::number_field(sys, "omega", "scenario.system", 1.0);
    if (sc.dim < 2) detail::bad_field("scenario.system.fock_cutoff", "must be >= 2");
    if (!(sc.osc.mass > 0.0)) detail::bad_field("scenario.system.m", "must be positive");
    if (!(sc.osc.omega > 0.0))
      detail::bad_field("scenario.system.omega", "must be positive");
  } else if (sc.kind == "spin" || sc.kind == "custom") {
    detail::check_keys(sys, {"kind", "dim"}, "scenario.system");
    sc.dim = static_cast<Eigen::Index>(detail::number_field(
        sys, "dim", "scenario.system", sc.kind == "spin" ? 2 : 0,
        sc.kind == "custom"));
    if (sc.dim < 1) detail::bad_field("scenario.system.dim", "must be >= 1");
  } else {
    detail::bad_field("scenario.system.kind",
                      "expected spin, oscillator or custom");
  }

  if (!j.contains("hamiltonian"))
    detail::bad_field("scenario.hamiltonian", "missing");
  sc.hamiltonian = detail::operator_field(j["hamiltonian"], sc, "scenario.hamiltonian");
  if (!is_hermitian(sc.hamiltonian))
    detail::bad_field("scenario.hamiltonian", "must be Hermitian");

  if (j.contains("split")) {
    const Json& sp = j["split"];
    detail::check_keys(sp, {"h1", "h2"}, "scenario.split");
    if (!sp.contains("h1") || !sp.contains("h2"))
      detail::bad_field("scenario.split", "needs both h1 and h2");
    const CMatrix h1 = detail::operator_field(sp["h1"], sc, "scenario.split.h1");
    const CMatrix h2 = detail::operator_field(sp["h2"], sc, "scenario.split.h2");
    if (deviation(h1 + h2, sc.hamiltonian) > 1e-10)
      detail::bad_field("scenario.split", "h1 + h2 must equal the Hamiltonian");
    sc.split.emplace(h1, h2);
  } else {
    sc.split.emplace(GaugeSplit::schroedinger(sc.hamiltonian));
  }

  if (!j.contains("state")) detail::bad_field("scenario.state", "missing");
  sc.state.emplace(detail::state_field(j["state"], sc, "scenario.state"));

  if (!j.contains("observables") || !j["observables"].is_array() ||
      j["observables"].empty())
    detail::bad_field("scenario.observables", "expected a nonempty array");
  for (std::size_t k = 0; k < j["observables"].size(); ++k) {
    const Json& ob = j["observables"][k];
    const std::string path = "scenario.observables[" + std::to_string(k) + "]";
    if (ob.is_string()) {
      sc.observables.emplace_back(ob.get<std::string>(),
                                  detail::operator_field(ob, sc, path));
    } else if (ob.is_object()) {
      detail::check_keys(ob, {"name", "matrix"}, path);
      if (!ob.contains("name") || !ob.contains("matrix"))
        detail::bad_field(path, "needs name and matrix");
      sc.observables.emplace_back(
          ob["name"].get<std::string>(),
          detail::operator_field(ob["matrix"], sc, path + ".matrix"));
    } else {
      detail::bad_field(path, "expected a preset name or {name, matrix}");
    }
  }

  if (!j.contains("time")) detail::bad_field("scenario.time", "missing");
  const Json& tm = j["time"];
  detail::check_keys(tm, {"t0", "t1", "steps"}, "scenario.time");
  sc.t0 = detail::number_field(tm, "t0", "scenario.time", 0.0, true);
  sc.t1 = detail::number_field(tm, "t1", "scenario.time", 0.0, true);
  if (!tm.contains("steps") || !tm["steps"].is_number_integer())
    detail::bad_field("scenario.time.steps", "expected an integer");
  sc.steps = tm["steps"].get<int>();
  if (sc.t1 < sc.t0) detail::bad_field("scenario.time.t1", "must be >= t0");
  if (sc.steps < 0) detail::bad_field("scenario.time.steps", "must be >= 0");

  sc.kappa = detail::number_field(j, "kappa", "scenario", 1.0);
  if (sc.kappa < 0.0) detail::bad_field("scenario.kappa", "must be >= 0");

  // echo of the resolved configuration, with presets expanded
  Json resolved;
  resolved["schema"] = 1;
  resolved["hbar"] = sc.hbar_value;
  resolved["system"] = Json{{"kind", sc.kind}, {"dim", sc.dim}};
  if (sc.kind == "oscillator") {
    resolved["system"]["m"] = sc.osc.mass;
    resolved["system"]["omega"] = sc.osc.omega;
  }
  resolved["hamiltonian"] = matrix_to_json(sc.hamiltonian);
  resolved["split"] = Json{{"h1", matrix_to_json(sc.split->h1)},
                           {"h2", matrix_to_json(sc.split->h2)}};
  resolved["state"] = matrix_to_json(sc.state->matrix());
  Json obs = Json::array();
  for (const auto& [name, m] : sc.observables) obs.push_back(name);
  resolved["observables"] = obs;
  resolved["time"] = Json{{"t0", sc.t0}, {"t1", sc.t1}, {"steps", sc.steps}};
  resolved["kappa"] = sc.kappa;
  sc.resolved = std::move(resolved);
  return sc;
}

inline Scenario load_scenario(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("scenario: invalid JSON in " + path + ": " +
                                e.what());
  }
  return parse_scenario(j);
}

struct SimulateResult {
  std::string trajectory_path;
  std::string worldtube_path;  // empty when no position observable is tracked
  std::string manifest_path;
};

// runs the scenario and writes trajectory.csv, worldtube.csv (when a
// position-like observable q / q1 / q2 ... is tracked) and manifest.json
inline SimulateResult run_simulate(const Scenario& sc,
                                   const std::string& out_dir) {
  namespace fs = std::filesystem;
  set_hbar(sc.hbar_value);
  fs::create_directories(out_dir);
  const std::vector<double> times = linspace(sc.t0, sc.t1, sc.steps);
  const Trajectory traj =
      simulate_trajectory(*sc.state, *sc.split, sc.observables, times);

  SimulateResult result;
  result.trajectory_path = (fs::path(out_dir) / "trajectory.csv").string();
  write_text_file(result.trajectory_path, trajectory_csv(traj));

  std::vector<std::size_t> position_series;
  for (std::size_t k = 0; k < traj.series.size(); ++k) {
    const std::string& name = traj.series[k].name;
    if (name == "q" || (name.size() > 1 && name[0] == 'q' &&
                        std::isdigit(static_cast<unsigned char>(name[1]))))
      position_series.push_back(k);
  }
  if (!position_series.empty()) {
    const WorldTube tube = world_tube(traj, position_series, sc.kappa);
    result.worldtube_path = (fs::path(out_dir) / "worldtube.csv").string();
    write_text_file(result.worldtube_path, worldtube_csv(tube));
  }

  Json manifest;
  manifest["scenario"] = sc.resolved;
  Json outputs;
  outputs["trajectory"] = "trajectory.csv";
  if (!position_series.empty())
    outputs["worldtube"] = "worldtube.csv";
  else
    outputs["worldtube"] = nullptr;
  manifest["outputs"] = std::move(outputs);
  result.manifest_path = (fs::path(out_dir) / "manifest.json").string();
  write_text_file(result.manifest_path, manifest.dump(2) + "\n");
  return result;
}

}  // namespace exlab
