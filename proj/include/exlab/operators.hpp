#pragma once

#include <cmath>

#include "exlab/common.hpp"
#include "exlab/density.hpp"

// Standard operator constructors: Pauli matrices and the truncated Fock
// realization of a single oscillator mode. Position and momentum are built
// from ladder operators at a configurable cutoff; products of truncated
// operators deviate from the untruncated ones only in the top corner, so
// states with negligible tail population see canonical behavior.

namespace exlab {

inline CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// a |n> = sqrt(n) |n-1>
inline CMatrix lowering_op(Eigen::Index cutoff) {
  require(cutoff >= 2, "lowering_op: cutoff must be >= 2");
  CMatrix a = CMatrix::Zero(cutoff, cutoff);
  for (Eigen::Index n = 1; n < cutoff; ++n)
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

inline CMatrix raising_op(Eigen::Index cutoff) {
  return lowering_op(cutoff).adjoint();
}

inline CMatrix number_op(Eigen::Index cutoff) {
  CMatrix n = CMatrix::Zero(cutoff, cutoff);
  for (Eigen::Index k = 0; k < cutoff; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

struct OscillatorParams {
  double mass = 1.0;
  double omega = 1.0;
};

inline CMatrix position_op(Eigen::Index cutoff, const OscillatorParams& osc) {
  require(osc.mass > 0.0 && osc.omega > 0.0,
          "position_op: mass and omega must be positive");
  const double scale = std::sqrt(hbar() / (2.0 * osc.mass * osc.omega));
  const CMatrix a = lowering_op(cutoff);
  return scale * (a + a.adjoint());
}

inline CMatrix momentum_op(Eigen::Index cutoff, const OscillatorParams& osc) {
  require(osc.mass > 0.0 && osc.omega > 0.0,
          "momentum_op: mass and omega must be positive");
  const double scale = std::sqrt(hbar() * osc.mass * osc.omega / 2.0);
  const CMatrix a = lowering_op(cutoff);
  return Complex(0, 1) * scale * (a.adjoint() - a);
}

// H = p^2/(2m) + m omega^2 q^2 / 2 from the truncated q, p
inline CMatrix oscillator_hamiltonian(Eigen::Index cutoff,
                                      const OscillatorParams& osc) {
  const CMatrix q = position_op(cutoff, osc);
  const CMatrix p = momentum_op(cutoff, osc);
  return hermitize(p * p / (2.0 * osc.mass) +
                   (osc.mass * osc.omega * osc.omega / 2.0) * q * q);
}

// population of the top `levels` basis states; the truncation monitor
inline double tail_mass(const CVector& psi, Eigen::Index levels = 2) {
  require(psi.size() > levels, "tail_mass: vector too short");
  double m = 0.0;
  for (Eigen::Index k = psi.size() - levels; k < psi.size(); ++k)
    m += std::norm(psi(k));
  return m / psi.squaredNorm();
}

inline CVector coherent_vector(Complex alpha, Eigen::Index cutoff) {
  require(cutoff >= 2, "coherent_vector: cutoff must be >= 2");
  CVector c(cutoff);
  c(0) = 1.0;
  for (Eigen::Index n = 1; n < cutoff; ++n)
    c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  return c / c.norm();
}

inline Density coherent_state(Complex alpha, Eigen::Index cutoff,
                              double tail_tol = 1e-8) {
  const CVector c = coherent_vector(alpha, cutoff);
  const double tail = tail_mass(c);
  if (tail > tail_tol)
    throw std::invalid_argument(
        "coherent_state: truncation tail " + std::to_string(tail) +
        " exceeds tolerance; raise the cutoff or lower |alpha|");
  return Density::pure(c);
}

inline Density fock_ground_state(Eigen::Index cutoff) {
  CVector c = CVector::Zero(cutoff);
  c(0) = 1.0;
  return Density::pure(c);
}

// (|0> + |1>)/sqrt(2), the sigma_x +1 eigenstate
inline CVector plus_vector() {
  CVector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace exlab
