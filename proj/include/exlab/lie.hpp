#pragma once

#include <vector>

#include "exlab/common.hpp"
#include "exlab/density.hpp"
#include "exlab/polynomial.hpp"

// The unified Lie product in its two realizations, the matching integral
// functionals, and expectations against quantum and classical states.
//
//   quantum    A <| B  =  (i/hbar)(AB - BA)
//   classical  A <| B  =  sum_i dA/dp_i dB/dq_i - dB/dp_i dA/dq_i
//
// Both satisfy anticommutativity, the product rule and the Jacobi
// relation; the suites in verify.hpp assert all of them.

namespace exlab {

inline CMatrix lie_product(const CMatrix& a, const CMatrix& b) {
  require(is_square(a) && is_square(b), "lie_product: matrices must be square");
  require(a.rows() == b.rows(), "lie_product: dimension mismatch");
  require_finite(a, "lie_product");
  require_finite(b, "lie_product");
  const Complex factor(0.0, 1.0 / hbar());
  return factor * (a * b - b * a);
}

inline PhasePolynomial lie_product(const PhasePolynomial& a,
                                   const PhasePolynomial& b) {
  require(a.dof() == b.dof(), "lie_product: dof mismatch");
  PhasePolynomial out(a.dof());
  for (int i = 0; i < a.dof(); ++i) {
    out += a.dp(i) * b.dq(i);
    out -= b.dp(i) * a.dq(i);
  }
  return out;
}

// Lie product of an enveloped quantity with a polynomial. The Gaussian
// weight participates through the product rule:
//   (A e) <| B = [A <| B - A * (sum_i p_i dB/dq_i - q_i dB/dp_i)] e.
// On this class the canonical invariance  integral((A e) <| B) = 0  and
// the integration-by-parts identity hold exactly.
inline GaussianEnvelope lie_product(const GaussianEnvelope& g,
                                    const PhasePolynomial& b) {
  require(g.dof() == b.dof(), "lie_product: dof mismatch");
  return GaussianEnvelope(lie_product(g.poly, b) -
                          g.poly * radial_rotation_term(b));
}

inline GaussianEnvelope lie_product(const PhasePolynomial& b,
                                    const GaussianEnvelope& g) {
  GaussianEnvelope out = lie_product(g, b);
  return GaussianEnvelope(-out.poly);
}

// trace integral of a quantum quantity
inline Complex integral(const CMatrix& a) {
  require_finite(a, "integral");
  return trace(a);
}

// Classical state: Gaussian phase-space density with mean (q_1..q_d,
// p_1..p_d) and symmetric positive-definite covariance. Expectations of
// polynomials are evaluated in closed form via moment expansion.
class GaussianPhaseState {
 public:
  GaussianPhaseState(RVector mean, RMatrix cov)
      : mean_(std::move(mean)), cov_(std::move(cov)) {
    require(mean_.size() >= 2 && mean_.size() % 2 == 0,
            "GaussianPhaseState: mean must have even length 2d");
    require(cov_.rows() == mean_.size() && cov_.cols() == mean_.size(),
            "GaussianPhaseState: covariance shape mismatch");
    require((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() <= 1e-12,
            "GaussianPhaseState: covariance must be symmetric");
    cov_ = 0.5 * (cov_ + cov_.transpose());
    Eigen::SelfAdjointEigenSolver<RMatrix> es(cov_, Eigen::EigenvaluesOnly);
    require(es.eigenvalues().minCoeff() > 0.0,
            "GaussianPhaseState: covariance must be positive definite");
  }

  static GaussianPhaseState standard(int dof) {
    return GaussianPhaseState(RVector::Zero(2 * dof),
                              RMatrix::Identity(2 * dof, 2 * dof));
  }

  int dof() const { return static_cast<int>(mean_.size()) / 2; }
  const RVector& mean() const { return mean_; }
  const RMatrix& cov() const { return cov_; }

 private:
  RVector mean_;
  RMatrix cov_;
};

namespace detail {

// E[prod_j z_{idx[j]}] for centered jointly Gaussian z, by recursive
// pairing (Isserlis). idx lists variable indices with multiplicity.
inline double central_moment(const RMatrix& cov, std::vector<int>& idx) {
  const std::size_t n = idx.size();
  if (n == 0) return 1.0;
  if (n % 2 == 1) return 0.0;
  const int first = idx[0];
  double acc = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    const int partner = idx[j];
    std::vector<int> rest;
    rest.reserve(n - 2);
    for (std::size_t k = 1; k < n; ++k)
      if (k != j) rest.push_back(idx[k]);
    acc += cov(first, partner) * central_moment(cov, rest);
  }
  return acc;
}

}  // namespace detail

// E[x^e] for x ~ N(mean, cov), by binomial expansion around the mean
inline double gaussian_monomial_moment(const GaussianPhaseState& state,
                                       const Exponents& e) {
  const int nvar = 2 * state.dof();
  require(static_cast<int>(e.size()) == nvar,
          "gaussian_monomial_moment: exponent length mismatch");
  // odometer over k_v <= e_v
  std::vector<unsigned> k(e.size(), 0);
  double acc = 0.0;
  while (true) {
    double coeff = 1.0;
    std::vector<int> idx;
    for (int v = 0; v < nvar; ++v) {
      // binomial(e_v, k_v) * mean_v^(e_v - k_v)
      unsigned choose = 1;
      for (unsigned j = 0; j < k[v]; ++j)
        choose = choose * (e[v] - j) / (j + 1);
      coeff *= static_cast<double>(choose);
      for (unsigned j = 0; j < e[v] - k[v]; ++j) coeff *= state.mean()(v);
      for (unsigned j = 0; j < k[v]; ++j) idx.push_back(v);
    }
    acc += coeff * detail::central_moment(state.cov(), idx);
    // advance odometer
    int v = 0;
    while (v < nvar && k[v] == e[v]) {
      k[v] = 0;
      ++v;
    }
    if (v == nvar) break;
    ++k[v];
  }
  return acc;
}

// q-expectation, quantum realization: Tr(rho A)
inline Complex expectation(const Density& state, const CMatrix& a) {
  require(is_square(a) && a.rows() == state.dim(),
          "expectation: dimension mismatch");
  require_finite(a, "expectation");
  return trace_product(state.matrix(), a);
}

// q-expectation, classical realization: Gaussian moment evaluation
inline double expectation(const GaussianPhaseState& state,
                          const PhasePolynomial& a) {
  require(a.dof() == state.dof(), "expectation: dof mismatch");
  double acc = 0.0;
  for (const auto& [e, c] : a.terms())
    acc += c.get_d() * gaussian_monomial_moment(state, e);
  return acc;
}

}  // namespace exlab
