#pragma once

#include <string>
#include <utility>
#include <vector>

#include "exlab/common.hpp"
#include "exlab/density.hpp"
#include "exlab/lie.hpp"
#include "exlab/uncertainty.hpp"

// Gauge-split time evolution. A split (H1, H2) with constant total
// H = H1 + H2 assigns time dependence to quantities (generated by H1) and
// to the state (generated by the remainder). Quantities rotate as
// A(t) = U1^+ A0 U1 with U1 = exp(-i H1 t / hbar); the state advances with
// the remainder of H expressed in the frame co-rotating with H1:
// rho(t) = V rho0 V^+ where V = U1^+ U and U = exp(-i H t / hbar). This
// keeps <A(t)> = Tr(U rho0 U^+ A0) for every split, so expectations depend
// on the total H only. The instantaneous equations of motion are
// dA/dt = (i/hbar)[H1, A] and drho/dt = (i/hbar)[rho, H2] at t = 0 (with
// the frame-transformed generator U1^+ H2 U1 at later times); for commuting
// splits, and in particular for (0,H) and (H,0), V = exp(-i H2 t / hbar)
// exactly.
//
// (0,H) freezes quantities: the Schroedinger picture, where the state obeys
// the von Neumann equation. (H,0) freezes the state: the Heisenberg
// picture. Intermediate splits give interaction pictures. The dynamics of
// the expectations themselves, d/dt<A> = <H <| A>, is realized here through
// the evolved state rather than by integrating the expectation flow
// directly; the suites verify the two views agree.

namespace exlab {

// exp(-i h t / hbar) through the eigendecomposition of Hermitian h;
// exact to roundoff for every t, no step-size error
class Propagator {
 public:
  explicit Propagator(const CMatrix& h) {
    require(is_square(h), "Propagator: matrix must be square");
    require_finite(h, "Propagator");
    require(is_hermitian(h), "Propagator: generator must be Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(h));
    vecs_ = es.eigenvectors();
    vals_ = es.eigenvalues();
  }

  Eigen::Index dim() const { return vecs_.rows(); }

  CMatrix at(double t) const {
    CVector phases(vals_.size());
    for (Eigen::Index k = 0; k < vals_.size(); ++k) {
      const double angle = -vals_(k) * t / hbar();
      phases(k) = Complex(std::cos(angle), std::sin(angle));
    }
    return vecs_ * phases.asDiagonal() * vecs_.adjoint();
  }

 private:
  CMatrix vecs_;
  RVector vals_;
};

inline CMatrix propagator(const CMatrix& h, double t) {
  return Propagator(h).at(t);
}

struct GaugeSplit {
  CMatrix h1;
  CMatrix h2;

  GaugeSplit(CMatrix h1_in, CMatrix h2_in)
      : h1(std::move(h1_in)), h2(std::move(h2_in)) {
    require(is_square(h1) && is_square(h2) && h1.rows() == h2.rows(),
            "GaugeSplit: h1 and h2 must be square with equal dimension");
    require_finite(h1, "GaugeSplit");
    require_finite(h2, "GaugeSplit");
    require(is_hermitian(h1) && is_hermitian(h2),
            "GaugeSplit: h1 and h2 must be Hermitian");
    require(hermiticity_defect(h1 + h2) <= kHermitianTol * 10,
            "GaugeSplit: total Hamiltonian must be Hermitian");
  }

  CMatrix total() const { return h1 + h2; }
  Eigen::Index dim() const { return h1.rows(); }

  static GaugeSplit schroedinger(const CMatrix& h) {
    return GaugeSplit(CMatrix::Zero(h.rows(), h.cols()), h);
  }

  static GaugeSplit heisenberg(const CMatrix& h) {
    return GaugeSplit(h, CMatrix::Zero(h.rows(), h.cols()));
  }

  // reference part h1, interaction remainder h - h1
  static GaugeSplit interaction(const CMatrix& h, const CMatrix& h1) {
    return GaugeSplit(h1, h - h1);
  }
};

inline std::pair<Density, CMatrix> evolve_split(const Density& rho0,
                                                const CMatrix& a0,
                                                const GaugeSplit& split,
                                                double t) {
  require(split.dim() == rho0.dim(), "evolve_split: state dimension mismatch");
  require(is_square(a0) && a0.rows() == rho0.dim(),
          "evolve_split: quantity dimension mismatch");
  const CMatrix u = Propagator(split.total()).at(t);
  const CMatrix u1 = Propagator(split.h1).at(t);
  const CMatrix v = u1.adjoint() * u;
  return {Density(v * rho0.matrix() * v.adjoint()),
          CMatrix(u1.adjoint() * a0 * u1)};
}

inline Complex expectation_at(const Density& rho0, const CMatrix& a0,
                              const GaugeSplit& split, double t) {
  const auto [rho_t, a_t] = evolve_split(rho0, a0, split, t);
  return expectation(rho_t, a_t);
}

// d/dt <A>_t evaluated at the given state: <H <| A> = (i/hbar)<[H,A]>
inline Complex ehrenfest_rhs(const Density& state, const CMatrix& a,
                             const CMatrix& h) {
  require(a.rows() == state.dim() && h.rows() == state.dim(),
          "ehrenfest_rhs: dimension mismatch");
  require(is_hermitian(h), "ehrenfest_rhs: Hamiltonian must be Hermitian");
  return expectation(state, lie_product(h, a));
}

// Two-time value in the Heisenberg picture: the state is advanced (von
// Neumann) to its reference time, the quantity carries its own Heisenberg
// time argument, both from a common anchor. Under a constant H the result
// depends only on the sum of the two times, which is exactly the time-shift
// covariance checked below.
inline Complex two_time_expectation(const Density& state, const CMatrix& phi,
                                    const CMatrix& h, double state_time,
                                    double quantity_time) {
  require(phi.rows() == state.dim() && h.rows() == state.dim(),
          "two_time_expectation: dimension mismatch");
  const Propagator prop(h);
  const CMatrix us = prop.at(state_time);
  const CMatrix uu = prop.at(quantity_time);
  const CMatrix rho_s = us * state.matrix() * us.adjoint();
  const CMatrix phi_u = uu.adjoint() * phi * uu;
  return trace_product(rho_s, phi_u);
}

// <phi(u)>_s == <phi(u+s-t)>_t, both sides built independently
inline bool heisenberg_time_shift_check(const Density& state,
                                        const CMatrix& phi, const CMatrix& h,
                                        double s, double t, double u,
                                        double tol = 1e-10) {
  const Complex lhs = two_time_expectation(state, phi, h, s, u);
  const Complex rhs = two_time_expectation(state, phi, h, t, u + s - t);
  return std::abs(lhs - rhs) <= tol;
}

struct Trajectory {
  struct Series {
    std::string name;
    std::vector<Complex> values;
    std::vector<double> sigmas;
  };

  std::vector<double> times;
  std::vector<Series> series;

  void validate() const {
    for (std::size_t i = 1; i < times.size(); ++i)
      require(times[i] > times[i - 1], "Trajectory: times must be strictly increasing");
    for (const auto& s : series) {
      require(s.values.size() == times.size() && s.sigmas.size() == times.size(),
              "Trajectory: series length mismatch");
      for (double sig : s.sigmas)
        require(sig >= 0.0, "Trajectory: uncertainties must be nonnegative");
    }
  }
};

inline std::vector<double> linspace(double t0, double t1, int steps) {
  require(steps >= 0, "linspace: steps must be nonnegative");
  if (steps == 0 || t1 == t0) return {t0};
  require(t1 > t0, "linspace: t1 must exceed t0");
  std::vector<double> out(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k)
    out[static_cast<std::size_t>(k)] = t0 + (t1 - t0) * k / steps;
  return out;
}

using NamedQuantity = std::pair<std::string, CMatrix>;

inline Trajectory simulate_trajectory(const Density& rho0,
                                      const GaugeSplit& split,
                                      const std::vector<NamedQuantity>& observables,
                                      const std::vector<double>& times) {
  Trajectory traj;
  traj.times = times;
  traj.series.resize(observables.size());
  for (std::size_t k = 0; k < observables.size(); ++k) {
    require(observables[k].second.rows() == rho0.dim(),
            "simulate_trajectory: observable dimension mismatch");
    traj.series[k].name = observables[k].first;
    traj.series[k].values.reserve(times.size());
    traj.series[k].sigmas.reserve(times.size());
  }
  const Propagator total(split.total());
  const Propagator frame(split.h1);
  for (double t : times) {
    const CMatrix u1 = frame.at(t);
    const CMatrix v = u1.adjoint() * total.at(t);
    const Density rho_t(v * rho0.matrix() * v.adjoint());
    for (std::size_t k = 0; k < observables.size(); ++k) {
      const CMatrix a_t = u1.adjoint() * observables[k].second * u1;
      const UncertainValue uv = uncertain_value(rho_t, a_t);
      traj.series[k].values.push_back(uv.value);
      traj.series[k].sigmas.push_back(uv.sigma);
    }
  }
  traj.validate();
  return traj;
}

}  // namespace exlab
