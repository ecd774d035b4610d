#pragma once

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "exlab/common.hpp"
#include "exlab/dynamics.hpp"
#include "exlab/polynomial.hpp"
#include "exlab/prob.hpp"
#include "exlab/qstats.hpp"
#include "exlab/worldtube.hpp"

// Wire formats.
//   matrices    row-major JSON arrays of [re, im] pairs
//   polynomials lists of {"exponents": [...], "coeff": "num/den"}
//   CSV         '.' decimal, no separators, 17 significant digits
// All emitters are deterministic: fixed field order, fixed float format.

namespace exlab {

using Json = nlohmann::ordered_json;

inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json vector_to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(Json::array({v(i).real(), v(i).imag()}));
  return out;
}

namespace detail {

[[noreturn]] inline void bad_field(const std::string& path,
                                   const std::string& what) {
  throw std::invalid_argument(path + ": " + what);
}

inline Complex entry_from_json(const Json& e, const std::string& path) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  bad_field(path, "expected a number or an [re, im] pair");
}

}  // namespace detail

inline CMatrix matrix_from_json(const Json& j, const std::string& path = "matrix") {
  if (!j.is_array() || j.empty()) detail::bad_field(path, "expected a nonempty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = j[0].is_array() ? static_cast<Eigen::Index>(j[0].size()) : 0;
  if (cols == 0) detail::bad_field(path, "expected nonempty rows");
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols)
      detail::bad_field(path, "rows must all have equal length");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = detail::entry_from_json(j[i][c], path);
  }
  return m;
}

inline CVector vector_from_json(const Json& j, const std::string& path = "vector") {
  if (!j.is_array() || j.empty()) detail::bad_field(path, "expected a nonempty array");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = detail::entry_from_json(j[i], path);
  return v;
}

inline std::string rational_to_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline mpq_class rational_from_string(const std::string& s,
                                      const std::string& path = "coeff") {
  try {
    mpq_class q(s);
    if (q.get_den() == 0) detail::bad_field(path, "zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    detail::bad_field(path, "expected a rational \"num/den\"");
  }
}

inline Json polynomial_to_json(const PhasePolynomial& poly) {
  Json terms = Json::array();
  for (const auto& [e, c] : poly.terms()) {
    Json term;
    term["exponents"] = e;
    term["coeff"] = rational_to_string(c);
    terms.push_back(std::move(term));
  }
  Json out;
  out["dof"] = poly.dof();
  out["terms"] = std::move(terms);
  return out;
}

inline PhasePolynomial polynomial_from_json(const Json& j,
                                            const std::string& path = "polynomial") {
  if (!j.is_object() || !j.contains("dof") || !j.contains("terms"))
    detail::bad_field(path, "expected {dof, terms}");
  PhasePolynomial poly(j["dof"].get<int>());
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("exponents") || !term.contains("coeff"))
      detail::bad_field(path, "terms need {exponents, coeff}");
    Exponents e = term["exponents"].get<Exponents>();
    poly.add_term(e, rational_from_string(term["coeff"].get<std::string>(),
                                          path + ".coeff"));
  }
  return poly;
}

// classical model file: {"weights": [...], "variables": {"n": [...]}}
struct LoadedModel {
  StochasticModel model;
  std::vector<std::pair<std::string, RandomVariable>> variables;
};

inline LoadedModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("weights"))
    detail::bad_field("model", "expected {weights, variables}");
  const auto& jw = j["weights"];
  if (!jw.is_array() || jw.empty()) detail::bad_field("model.weights", "expected a nonempty array");
  RVector w(static_cast<Eigen::Index>(jw.size()));
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = jw[i].get<double>();
  LoadedModel out{StochasticModel(w), {}};
  if (j.contains("variables")) {
    for (const auto& [name, values] : j["variables"].items()) {
      if (!values.is_array() || values.size() != jw.size())
        detail::bad_field("model.variables." + name,
                          "length must match weights");
      RVector v(w.size());
      for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = values[i].get<double>();
      out.variables.emplace_back(name, RandomVariable(v));
    }
  }
  return out;
}

inline std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t";
  for (const auto& s : traj.series)
    out += "," + s.name + "_re," + s.name + "_im," + s.name + "_sigma";
  out += "\n";
  for (std::size_t r = 0; r < traj.times.size(); ++r) {
    out += fmt17(traj.times[r]);
    for (const auto& s : traj.series) {
      out += "," + fmt17(s.values[r].real()) + "," + fmt17(s.values[r].imag()) +
             "," + fmt17(s.sigmas[r]);
    }
    out += "\n";
  }
  return out;
}

inline std::string worldtube_csv(const WorldTube& tube) {
  std::string out;
  if (tube.components() == 1) {
    out = "t,center,lower,upper\n";
  } else {
    out = "t";
    for (Eigen::Index c = 0; c < tube.components(); ++c) {
      const std::string k = std::to_string(c + 1);
      out += ",center_" + k + ",lower_" + k + ",upper_" + k;
    }
    out += "\n";
  }
  for (std::size_t r = 0; r < tube.times.size(); ++r) {
    out += fmt17(tube.times[r]);
    for (Eigen::Index c = 0; c < tube.components(); ++c) {
      const auto row = static_cast<Eigen::Index>(r);
      out += "," + fmt17(tube.center(row, c)) + "," + fmt17(tube.lower(row, c)) +
             "," + fmt17(tube.upper(row, c));
    }
    out += "\n";
  }
  return out;
}

// table of (x, F(x)) at the jump points of a finite-model CDF
inline std::string cdf_table_csv(const StochasticModel& model,
                                 const RandomVariable& a) {
  std::set<double> points(a.values().data(),
                          a.values().data() + a.values().size());
  std::string out = "x,F\n";
  for (double x : points)
    out += fmt17(x) + "," + fmt17(cdf(model, a, x)) + "\n";
  return out;
}

inline Json frequency_to_json(const FrequencyExperiment& ex, double k = 4.0) {
  Json j;
  j["p_theory"] = ex.p_theory;
  j["p_hat"] = ex.p_hat;
  j["N"] = ex.n;
  j["seed"] = ex.seed;
  j["sigma_bound"] = ex.sigma_bound;
  j["within_k_sigma"] = within_k_sigma(ex, k);
  return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out.good()) throw std::runtime_error("write failed for " + path);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace exlab
