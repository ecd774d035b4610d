#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "exlab/common.hpp"
#include "exlab/density.hpp"
#include "exlab/lie.hpp"
#include "exlab/random.hpp"
#include "exlab/uncertainty.hpp"

// Quantum statements and q-probabilities, spectral events, i.i.d. product
// ensembles with the sqrt(N) law checked by joint-space brute force, and
// seeded relative-frequency experiments.

namespace exlab {

// Hermitian idempotent projector: P^2 = P = P^+
class QuantumStatement {
 public:
  explicit QuantumStatement(CMatrix p) : p_(std::move(p)) {
    require(is_square(p_), "QuantumStatement: matrix must be square");
    require_finite(p_, "QuantumStatement");
    require(hermiticity_defect(p_) <= kHermitianTol,
            "QuantumStatement: not Hermitian within 1e-12");
    p_ = hermitize(p_);
    require(deviation(p_ * p_, p_) <= kProjectorTol,
            "QuantumStatement: not idempotent within 1e-10");
  }

  const CMatrix& matrix() const { return p_; }
  Eigen::Index dim() const { return p_.rows(); }

 private:
  CMatrix p_;
};

// Pr(P) = <P> for Hermitian P with spectrum in [0,1] (checked); the result
// is real up to roundoff and clamped to [0,1]
inline double q_probability(const Density& state, const CMatrix& p) {
  require(is_square(p) && p.rows() == state.dim(),
          "q_probability: dimension mismatch");
  require(is_hermitian(p), "q_probability: quantity must be Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(p), Eigen::EigenvaluesOnly);
  require(es.eigenvalues().minCoeff() >= -kProjectorTol &&
              es.eigenvalues().maxCoeff() <= 1.0 + kProjectorTol,
          "q_probability: spectrum must lie in [0,1]");
  const double value = expectation(state, p).real();
  if (value < -1e-12 || value > 1.0 + 1e-12)
    throw std::logic_error("q_probability: value escaped [0,1] beyond roundoff");
  return std::min(1.0, std::max(0.0, value));
}

inline double q_probability(const Density& state, const QuantumStatement& p) {
  const double value = expectation(state, p.matrix()).real();
  return std::min(1.0, std::max(0.0, value));
}

// projector of a Hermitian quantity onto the open interval ]lo, hi[.
// Eigenvalues within edge_tol of an endpoint are excluded.
inline QuantumStatement spectral_event(const CMatrix& a, double lo, double hi,
                                       double edge_tol = 1e-10) {
  require(is_square(a), "spectral_event: matrix must be square");
  require(is_hermitian(a), "spectral_event: quantity must be Hermitian");
  require(lo < hi, "spectral_event: need lo < hi");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(a));
  CMatrix p = CMatrix::Zero(a.rows(), a.cols());
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double lambda = es.eigenvalues()(k);
    if (lambda > lo + edge_tol && lambda < hi - edge_tol) {
      const CVector v = es.eigenvectors().col(k);
      p += v * v.adjoint();
    }
  }
  return QuantumStatement(p);
}

// squared overlap |phi^* psi|^2; the success probability of the binary
// test P = phi phi^* in the pure state psi
inline double test_for_state(const CVector& phi, const CVector& psi) {
  require(phi.size() == psi.size(), "test_for_state: dimension mismatch");
  require(std::abs(phi.norm() - 1.0) <= 1e-12 &&
              std::abs(psi.norm() - 1.0) <= 1e-12,
          "test_for_state: vectors must be normalized");
  return std::norm(phi.dot(psi));  // Eigen dot conjugates the left argument
}

inline CMatrix tensor_power(const CMatrix& a, int n) {
  require(n >= 1, "tensor_power: n must be >= 1");
  CMatrix out = a;
  for (int k = 1; k < n; ++k) out = kron(out, a);
  return out;
}

// I x ... x A x ... x I with A at `site` (0 = leftmost factor)
inline CMatrix embed_site(const CMatrix& a, int site, int n_sites) {
  require(is_square(a), "embed_site: matrix must be square");
  require(site >= 0 && site < n_sites, "embed_site: site out of range");
  const Eigen::Index d = a.rows();
  CMatrix out = site == 0 ? a : CMatrix(identity(d));
  for (int k = 1; k < n_sites; ++k)
    out = kron(out, k == site ? a : CMatrix(identity(d)));
  return out;
}

// reduce a state on d^n sites to the marginal at `site`
inline CMatrix partial_trace_site(const CMatrix& joint, int site, int sub_dim,
                                  int n_sites) {
  require(is_square(joint), "partial_trace_site: matrix must be square");
  Eigen::Index expected = 1;
  for (int k = 0; k < n_sites; ++k) expected *= sub_dim;
  require(joint.rows() == expected, "partial_trace_site: dimension mismatch");
  require(site >= 0 && site < n_sites, "partial_trace_site: site out of range");
  Eigen::Index left = 1, right = 1;
  for (int k = 0; k < site; ++k) left *= sub_dim;
  for (int k = site + 1; k < n_sites; ++k) right *= sub_dim;
  CMatrix out = CMatrix::Zero(sub_dim, sub_dim);
  for (Eigen::Index a = 0; a < sub_dim; ++a)
    for (Eigen::Index b = 0; b < sub_dim; ++b)
      for (Eigen::Index l = 0; l < left; ++l)
        for (Eigen::Index r = 0; r < right; ++r)
          out(a, b) += joint((l * sub_dim + a) * right + r,
                             (l * sub_dim + b) * right + r);
  return out;
}

// N identically prepared, independent copies: the joint state is the
// N-fold tensor power of the subsystem state. Construction is verified by
// partial traces; the identical-preparation and independence relations
// then hold for every subsystem quantity by construction.
class ProductEnsemble {
 public:
  ProductEnsemble(Density sub_state, int subsystems,
                  Eigen::Index dim_cap = 4096)
      : sub_(std::move(sub_state)), n_(subsystems) {
    require(n_ >= 1, "ProductEnsemble: need at least one subsystem");
    Eigen::Index joint_dim = 1;
    for (int k = 0; k < n_; ++k) {
      joint_dim *= sub_.dim();
      if (joint_dim > dim_cap)
        throw std::invalid_argument(
            "ProductEnsemble: joint dimension exceeds cap");
    }
    // a single copy is the subsystem itself; rebuilding it through the
    // validator would renormalize and cost an ulp of exactness
    joint_ = n_ == 1 ? sub_ : Density(tensor_power(sub_.matrix(), n_));
    for (int site = 0; site < n_; ++site) {
      const CMatrix marginal = partial_trace_site(
          joint_->matrix(), site, static_cast<int>(sub_.dim()), n_);
      if (deviation(marginal, sub_.matrix()) > 1e-12)
        throw std::logic_error("ProductEnsemble: partial-trace check failed");
    }
  }

  const Density& sub_state() const { return sub_; }
  const Density& joint() const { return *joint_; }
  int subsystems() const { return n_; }
  Eigen::Index sub_dim() const { return sub_.dim(); }

  CMatrix site_quantity(const CMatrix& a, int site) const {
    require(a.rows() == sub_.dim(), "site_quantity: dimension mismatch");
    return embed_site(a, site, n_);
  }

  // (1/N) sum_l A_l on the joint space
  CMatrix mean_quantity(const CMatrix& a) const {
    require(a.rows() == sub_.dim(), "mean_quantity: dimension mismatch");
    CMatrix out = site_quantity(a, 0);
    for (int site = 1; site < n_; ++site) out += site_quantity(a, site);
    return out / static_cast<double>(n_);
  }

 private:
  Density sub_;
  int n_;
  std::optional<Density> joint_;
};

// max over sites of |<A_k> - <A_l>| (identical preparation)
inline double identical_residual(const ProductEnsemble& ens, const CMatrix& a) {
  double worst = 0.0;
  const Complex first =
      expectation(ens.joint(), ens.site_quantity(a, 0));
  for (int site = 1; site < ens.subsystems(); ++site)
    worst = std::max(worst,
                     std::abs(expectation(ens.joint(),
                                          ens.site_quantity(a, site)) -
                              first));
  return worst;
}

// max over site pairs of |<A_k B_l> - <A_k><B_l>| (independence)
inline double independence_residual(const ProductEnsemble& ens,
                                    const CMatrix& a, const CMatrix& b) {
  double worst = 0.0;
  for (int k = 0; k < ens.subsystems(); ++k) {
    for (int l = 0; l < ens.subsystems(); ++l) {
      if (k == l) continue;
      const CMatrix ak = ens.site_quantity(a, k);
      const CMatrix bl = ens.site_quantity(b, l);
      const Complex joint_val = expectation(ens.joint(), CMatrix(ak * bl));
      const Complex product = expectation(ens.joint(), ak) *
                              expectation(ens.joint(), bl);
      worst = std::max(worst, std::abs(joint_val - product));
    }
  }
  return worst;
}

struct LlnCheck {
  UncertainValue mean_quantity;  // brute-force value on the joint space
  double mean_residual = 0.0;    // |<mean> - <A_l>|
  double sigma_residual = 0.0;   // |sigma_mean - sigma_l / sqrt(N)|
  double second_moment_residual = 0.0;  // |<M*M> - (sigma^2/N + |mu|^2)|
};

// both sides of the sqrt(N) law, computed independently: the joint-space
// brute force against the single-subsystem formula
inline LlnCheck lln_check(const ProductEnsemble& ens, const CMatrix& a) {
  LlnCheck out;
  const CMatrix mean_op = ens.mean_quantity(a);
  out.mean_quantity = uncertain_value(ens.joint(), mean_op);
  const UncertainValue sub = uncertain_value(ens.sub_state(), a);
  out.mean_residual = std::abs(out.mean_quantity.value - sub.value);
  const double expected_sigma =
      sub.sigma / std::sqrt(static_cast<double>(ens.subsystems()));
  out.sigma_residual = std::abs(out.mean_quantity.sigma - expected_sigma);
  const double second = trace_product(ens.joint().matrix(),
                                      CMatrix(mean_op.adjoint() * mean_op))
                            .real();
  const double predicted = sub.sigma * sub.sigma /
                               static_cast<double>(ens.subsystems()) +
                           std::norm(sub.value);
  out.second_moment_residual = std::abs(second - predicted);
  return out;
}

// the mean quantity with its uncertain value; throws if the construction
// contract (mean and sqrt(N) uncertainty) fails beyond tolerance
inline UncertainValue lln_mean_quantity(const ProductEnsemble& ens,
                                        const CMatrix& a, double tol = 1e-12) {
  const LlnCheck check = lln_check(ens, a);
  if (check.mean_residual > tol || check.sigma_residual > tol)
    throw std::logic_error("lln_mean_quantity: sqrt(N) contract violated");
  return check.mean_quantity;
}

struct FrequencyExperiment {
  double p_theory = 0.0;
  double p_hat = 0.0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  double sigma_bound = 0.0;  // sqrt(p_hat (1-p_hat) / n)
};

// N seeded Bernoulli draws at p = <P>; a statistical-consistency check of
// the frequency reading of q-probability, not a measurement model
inline FrequencyExperiment relative_frequency(const Density& state,
                                              const QuantumStatement& p,
                                              std::uint64_t n,
                                              std::uint64_t seed) {
  require(n >= 1, "relative_frequency: need at least one draw");
  FrequencyExperiment ex;
  ex.p_theory = q_probability(state, p);
  ex.n = n;
  ex.seed = seed;
  Rng rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t k = 0; k < n; ++k)
    if (rng.uniform() < ex.p_theory) ++hits;
  ex.p_hat = static_cast<double>(hits) / static_cast<double>(n);
  ex.sigma_bound = std::sqrt(ex.p_hat * (1.0 - ex.p_hat) / static_cast<double>(n));
  return ex;
}

// the k-sigma statistical safeguard against the theory probability
inline bool within_k_sigma(const FrequencyExperiment& ex, double k = 4.0) {
  const double bound =
      k * std::sqrt(ex.p_theory * (1.0 - ex.p_theory) /
                    static_cast<double>(ex.n));
  return std::abs(ex.p_hat - ex.p_theory) <= bound;
}

}  // namespace exlab
