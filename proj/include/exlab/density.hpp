#pragma once

#include <utility>

#include "exlab/common.hpp"

namespace exlab {

// Validated density matrix: Hermitian within 1e-12 (absolute), unit trace
// within 1e-12, smallest eigenvalue >= -1e-10. Drift inside those bands is
// repaired by symmetrization and trace renormalization; anything beyond is
// a hard error, since it signals a broken computation rather than roundoff.
//
// The state also keeps a factor L with rho = L L^+ (columns spanning the
// support). Second moments are formed as squared norms against L, which
// keeps near-zero variances accurate: the cancellation happens before the
// squaring, not after.
class Density {
 public:
  explicit Density(CMatrix rho) : rho_(std::move(rho)) {
    require(is_square(rho_) && rho_.rows() >= 1, "Density: matrix must be square");
    require_finite(rho_, "Density");
    const double herm = hermiticity_defect(rho_);
    if (herm > kHermitianTol)
      throw std::invalid_argument("Density: not Hermitian (defect " +
                                  std::to_string(herm) + ")");
    rho_ = hermitize(rho_);
    const Complex tr = trace(rho_);
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol)
      throw std::invalid_argument("Density: trace differs from 1 by more than 1e-12");
    rho_ /= tr.real();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_);
    min_eigenvalue_ = es.eigenvalues().minCoeff();
    if (min_eigenvalue_ < kPsdFloor)
      throw std::invalid_argument(
          "Density: negative eigenvalue beyond tolerance (" +
          std::to_string(min_eigenvalue_) + ")");
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
      if (es.eigenvalues()(k) > 0.0) ++rank;
    if (rank == 0) rank = 1;
    factor_.resize(rho_.rows(), rank);
    Eigen::Index col = 0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
      const double w = es.eigenvalues()(k);
      if (w > 0.0 && col < rank)
        factor_.col(col++) = std::sqrt(w) * es.eigenvectors().col(k);
    }
    if (col == 0) factor_.col(0) = es.eigenvectors().col(0) * 0.0;
  }

  // pure state from a (not necessarily normalized) vector; the factor is
  // the state vector itself, no eigendecomposition needed
  static Density pure(const CVector& psi) {
    require(psi.size() >= 1, "Density::pure: empty vector");
    require(psi.allFinite(), "Density::pure: entries must be finite");
    const double n2 = psi.squaredNorm();
    require(n2 > 0.0, "Density::pure: zero vector");
    Density d;
    const CVector unit = psi / std::sqrt(n2);
    d.rho_ = unit * unit.adjoint();
    d.factor_ = unit;
    d.min_eigenvalue_ = 0.0;
    return d;
  }

  static Density maximally_mixed(Eigen::Index n) {
    require(n >= 1, "Density::maximally_mixed: dimension must be >= 1");
    Density d;
    d.rho_ = CMatrix::Identity(n, n) / static_cast<double>(n);
    d.factor_ = CMatrix::Identity(n, n) / std::sqrt(static_cast<double>(n));
    d.min_eigenvalue_ = 1.0 / static_cast<double>(n);
    return d;
  }

  const CMatrix& matrix() const { return rho_; }
  // rho = factor() * factor().adjoint()
  const CMatrix& factor() const { return factor_; }
  Eigen::Index dim() const { return rho_.rows(); }
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  Density() = default;

  CMatrix rho_;
  CMatrix factor_;
  double min_eigenvalue_ = 0.0;
};

}  // namespace exlab
