#pragma once

#include <cmath>

#include "exlab/common.hpp"
#include "exlab/density.hpp"
#include "exlab/lie.hpp"

// Uncertain values and the uncertainty machinery: sigma_A from the centered
// second moment, the Robertson inequality, and significance classification.

namespace exlab {

struct UncertainValue {
  Complex value;
  double sigma = 0.0;
};

// value = <A>, sigma = sqrt(<(A-<A>)^2>) for Hermitian A; for the general
// case sigma = sqrt(<(A-<A>)*(A-<A>)>) = sqrt(<A*A> - |<A>|^2). Both reduce
// to the Frobenius norm of (A - <A>) L against the state factor L, which
// stays accurate down to dispersion-free states.
inline UncertainValue uncertain_value(const Density& state, const CMatrix& a) {
  require(is_square(a) && a.rows() == state.dim(),
          "uncertain_value: dimension mismatch");
  const Complex mean = expectation(state, a);
  const Complex center = is_hermitian(a) ? Complex(mean.real(), 0.0) : mean;
  const CMatrix centered = (a - center * identity(a.rows())) * state.factor();
  return {mean, centered.norm()};
}

// second route for the same number: sqrt(<A^2> - <A>^2) resp.
// sqrt(<A*A> - |<A>|^2); kept separate so the two expressions can be
// compared against each other
inline double sigma_uncentered(const Density& state, const CMatrix& a) {
  require(is_square(a) && a.rows() == state.dim(),
          "sigma_uncentered: dimension mismatch");
  const Complex mean = expectation(state, a);
  double s2;
  if (is_hermitian(a)) {
    const double second = trace_product(state.matrix(), CMatrix(a * a)).real();
    s2 = second - mean.real() * mean.real();
  } else {
    const double second =
        trace_product(state.matrix(), CMatrix(a.adjoint() * a)).real();
    s2 = second - std::norm(mean);
  }
  if (s2 < 0.0) {
    if (s2 < -1e-12)
      throw std::domain_error("sigma_uncentered: variance negative beyond roundoff");
    s2 = 0.0;
  }
  return std::sqrt(s2);
}

struct RobertsonResult {
  double lhs = 0.0;  // sigma_A * sigma_B
  double rhs = 0.0;  // |<[A,B]>| / 2
  bool holds = false;
};

inline RobertsonResult robertson_check(const Density& state, const CMatrix& a,
                                       const CMatrix& b, double slack = 1e-10) {
  require(a.rows() == b.rows() && a.rows() == state.dim(),
          "robertson_check: dimension mismatch");
  require(is_hermitian(a) && is_hermitian(b),
          "robertson_check: quantities must be Hermitian");
  RobertsonResult r;
  r.lhs = uncertain_value(state, a).sigma * uncertain_value(state, b).sigma;
  const CMatrix comm = a * b - b * a;
  r.rhs = 0.5 * std::abs(expectation(state, comm));
  r.holds = r.lhs >= r.rhs - slack;
  return r;
}

enum class Significance { significant, noise, indeterminate };

// sigma <= |value|/threshold -> significant; sigma >= threshold*|value|
// -> noise; everything between is indeterminate. The threshold
// operationalizes "much less than"; it must exceed 1.
inline Significance classify_significance(const UncertainValue& u,
                                          double threshold = 10.0) {
  require(threshold > 1.0, "classify_significance: threshold must exceed 1");
  const double mag = std::abs(u.value);
  if (u.sigma * threshold <= mag) return Significance::significant;
  if (u.sigma >= threshold * mag) return Significance::noise;
  return Significance::indeterminate;
}

inline const char* to_string(Significance s) {
  switch (s) {
    case Significance::significant: return "significant";
    case Significance::noise: return "noise";
    default: return "indeterminate";
  }
}

}  // namespace exlab
