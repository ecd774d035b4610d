#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

// Shared aliases, tolerances and small matrix helpers used across the
// library. All quantities are finite-dimensional complex matrices; states
// are validated density matrices (see density.hpp).

namespace exlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// State-level tolerances. Drift within tolerance is repaired, anything
// beyond is a hard error.
inline constexpr double kHermitianTol = 1e-12;  // absolute, on states
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdFloor = -1e-10;  // smallest admissible eigenvalue
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kProjectorTol = 1e-10;

namespace detail {
inline double& hbar_storage() {
  static double value = 1.0;
  return value;
}
}  // namespace detail

// Planck constant for the session (default 1). Set it once before building
// operators; it is read by the quantum Lie bracket, propagators and the
// ladder-operator constructors.
inline double hbar() { return detail::hbar_storage(); }

inline void set_hbar(double value) {
  if (!(value > 0.0)) throw std::invalid_argument("hbar must be positive");
  detail::hbar_storage() = value;
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

inline bool is_square(const CMatrix& a) { return a.rows() == a.cols(); }

inline double max_abs(const CMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

// max-entry deviation between two equally shaped matrices
inline double deviation(const CMatrix& a, const CMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          "deviation: shape mismatch");
  return max_abs(a - b);
}

inline void require_finite(const CMatrix& a, const std::string& what) {
  if (!a.allFinite())
    throw std::invalid_argument(what + ": entries must be finite");
}

inline double hermiticity_defect(const CMatrix& a) {
  return max_abs(a - a.adjoint());
}

// Relative test: max|A - A^+| <= tol * max|A|. The zero matrix passes.
inline bool is_hermitian(const CMatrix& a, double rel_tol = 1e-12) {
  require(is_square(a), "is_hermitian: matrix must be square");
  const double scale = max_abs(a);
  return hermiticity_defect(a) <= rel_tol * (scale == 0.0 ? 1.0 : scale);
}

inline CMatrix hermitize(const CMatrix& a) { return 0.5 * (a + a.adjoint()); }

inline CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

// Tr(a b), accumulated in extended precision with a fixed summation order
// so results are reproducible bit for bit. O(n^2).
inline Complex trace_product(const CMatrix& a, const CMatrix& b) {
  require(is_square(a) && is_square(b) && a.rows() == b.rows(),
          "trace_product: dimension mismatch");
  long double re = 0.0L, im = 0.0L;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Complex x = a(i, k);
      const Complex y = b(k, i);
      re += static_cast<long double>(x.real()) * y.real() -
            static_cast<long double>(x.imag()) * y.imag();
      im += static_cast<long double>(x.real()) * y.imag() +
            static_cast<long double>(x.imag()) * y.real();
    }
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

inline Complex trace(const CMatrix& a) {
  require(is_square(a), "trace: matrix must be square");
  long double re = 0.0L, im = 0.0L;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    re += a(i, i).real();
    im += a(i, i).imag();
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace exlab
