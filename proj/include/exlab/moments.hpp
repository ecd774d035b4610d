#pragma once

#include <utility>
#include <vector>

#include "exlab/common.hpp"
#include "exlab/density.hpp"
#include "exlab/dynamics.hpp"
#include "exlab/operators.hpp"

// Closed first/second moment dynamics for quadratic Hamiltonians
// H = p^2/(2m) + m omega^2 q^2 / 2 (omega = 0 covers the free particle).
// The moment equations are linear; the flow is the matrix exponential of
// the classical generator, evaluated in closed form per mode. Ordering is
// (q_1..q_d, p_1..p_d), matching the classical polynomial variables.

namespace exlab {

struct MomentState {
  RVector first;   // <q_i>, <p_i>
  RMatrix second;  // symmetrized second moments <(AB+BA)/2>

  MomentState(RVector first_in, RMatrix second_in)
      : first(std::move(first_in)), second(std::move(second_in)) {
    require(first.size() >= 2 && first.size() % 2 == 0,
            "MomentState: first-moment vector must have even length 2d");
    require(second.rows() == first.size() && second.cols() == first.size(),
            "MomentState: second-moment shape mismatch");
    require((second - second.transpose()).cwiseAbs().maxCoeff() <= 1e-12,
            "MomentState: second moments must be symmetric");
    second = 0.5 * (second + second.transpose());
    Eigen::SelfAdjointEigenSolver<RMatrix> es(covariance(),
                                              Eigen::EigenvaluesOnly);
    require(es.eigenvalues().minCoeff() >= -1e-10,
            "MomentState: covariance must be positive semidefinite");
  }

  int dof() const { return static_cast<int>(first.size()) / 2; }
  RMatrix covariance() const { return second - first * first.transpose(); }
};

// exp(K t) for dq/dt = p/m, dp/dt = -m omega^2 q, applied per mode
inline RMatrix quadratic_flow(const OscillatorParams& osc, double t, int dof) {
  require(osc.mass > 0.0, "quadratic_flow: mass must be positive");
  require(osc.omega >= 0.0, "quadratic_flow: omega must be nonnegative");
  double eqq, eqp, epq, epp;
  if (osc.omega == 0.0) {
    eqq = 1.0;
    eqp = t / osc.mass;
    epq = 0.0;
    epp = 1.0;
  } else {
    const double c = std::cos(osc.omega * t);
    const double s = std::sin(osc.omega * t);
    eqq = c;
    eqp = s / (osc.mass * osc.omega);
    epq = -osc.mass * osc.omega * s;
    epp = c;
  }
  RMatrix flow = RMatrix::Zero(2 * dof, 2 * dof);
  for (int i = 0; i < dof; ++i) {
    flow(i, i) = eqq;
    flow(i, dof + i) = eqp;
    flow(dof + i, i) = epq;
    flow(dof + i, dof + i) = epp;
  }
  return flow;
}

inline MomentState evolve_moments_quadratic(const MomentState& m0,
                                            const OscillatorParams& osc,
                                            double t) {
  const RMatrix e = quadratic_flow(osc, t, m0.dof());
  return MomentState(e * m0.first, e * m0.second * e.transpose());
}

// first and second moments of a quantum state over given (q_i, p_i) pairs
inline MomentState extract_moments(const Density& state,
                                   const std::vector<CMatrix>& qs,
                                   const std::vector<CMatrix>& ps) {
  require(!qs.empty() && qs.size() == ps.size(),
          "extract_moments: need matching q and p lists");
  const int d = static_cast<int>(qs.size());
  std::vector<CMatrix> ops;
  ops.reserve(2 * d);
  for (const auto& q : qs) ops.push_back(q);
  for (const auto& p : ps) ops.push_back(p);
  RVector first(2 * d);
  RMatrix second(2 * d, 2 * d);
  for (int i = 0; i < 2 * d; ++i)
    first(i) = expectation(state, ops[i]).real();
  for (int i = 0; i < 2 * d; ++i) {
    for (int j = i; j < 2 * d; ++j) {
      const CMatrix sym = 0.5 * (ops[i] * ops[j] + ops[j] * ops[i]);
      second(i, j) = second(j, i) = expectation(state, sym).real();
    }
  }
  return MomentState(first, second);
}

// trajectory of the position components with their spreads, driven by the
// closed moment flow; feeds the world-tube extraction for classical-limit
// and free-packet studies
inline Trajectory moment_trajectory(const MomentState& m0,
                                    const OscillatorParams& osc,
                                    const std::vector<double>& times,
                                    const std::string& base_name = "q") {
  Trajectory traj;
  traj.times = times;
  const int d = m0.dof();
  traj.series.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    auto& s = traj.series[static_cast<std::size_t>(i)];
    s.name = d == 1 ? base_name : base_name + std::to_string(i + 1);
    s.values.reserve(times.size());
    s.sigmas.reserve(times.size());
  }
  for (double t : times) {
    const MomentState m = evolve_moments_quadratic(m0, osc, t);
    const RMatrix cov = m.covariance();
    for (int i = 0; i < d; ++i) {
      auto& s = traj.series[static_cast<std::size_t>(i)];
      s.values.push_back(Complex(m.first(i), 0.0));
      s.sigmas.push_back(std::sqrt(std::max(0.0, cov(i, i))));
    }
  }
  traj.validate();
  return traj;
}

}  // namespace exlab
