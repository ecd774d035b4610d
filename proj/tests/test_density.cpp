#include <catch2/catch_amalgamated.hpp>

#include "exlab/density.hpp"
#include "exlab/operators.hpp"
#include "exlab/random.hpp"

using namespace exlab;

TEST_CASE("valid construction and repair of roundoff drift") {
  CMatrix rho = CMatrix::Zero(2, 2);
  rho(0, 0) = 0.75;
  rho(1, 1) = 0.25;
  rho(0, 1) = Complex(0.1, 5e-13);   // tiny non-Hermitian drift
  rho(1, 0) = Complex(0.1, 4.9e-13); // (conjugate would be -5e-13)
  rho(0, 0) += 3e-13;                // tiny trace drift
  const Density d(rho);
  CHECK(hermiticity_defect(d.matrix()) < 1e-15);
  CHECK(std::abs(trace(d.matrix()) - Complex(1.0)) < 1e-15);
  CHECK(d.min_eigenvalue() >= 0.0);
}

TEST_CASE("hard errors beyond tolerance") {
  CMatrix nonherm = CMatrix::Zero(2, 2);
  nonherm(0, 0) = 0.5;
  nonherm(1, 1) = 0.5;
  nonherm(0, 1) = Complex(0.0, 1e-6);
  CHECK_THROWS_AS(Density(nonherm), std::invalid_argument);

  CMatrix off_trace = CMatrix::Identity(2, 2);  // trace 2
  CHECK_THROWS_AS(Density(off_trace), std::invalid_argument);

  CMatrix indefinite = CMatrix::Zero(2, 2);
  indefinite(0, 0) = 1.001;
  indefinite(1, 1) = -0.001;
  CHECK_THROWS_AS(Density(indefinite), std::invalid_argument);

  CMatrix nan_entry = CMatrix::Identity(2, 2) * 0.5;
  nan_entry(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Density(nan_entry), std::invalid_argument);
}

TEST_CASE("pure states normalize and are rank one") {
  CVector psi(2);
  psi << Complex(3.0, 0.0), Complex(0.0, 4.0);  // unnormalized
  const Density d = Density::pure(psi);
  CHECK(std::abs(trace(d.matrix()) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(d.matrix()(0, 0) - Complex(9.0 / 25.0)) < 1e-15);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(d.matrix(), Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues()(0) < 1e-14);       // rank one
  CHECK(es.eigenvalues()(1) == Catch::Approx(1.0).margin(1e-14));
  CHECK_THROWS_AS(Density::pure(CVector::Zero(3)), std::invalid_argument);
}

TEST_CASE("random densities satisfy the contract") {
  Rng rng(31);
  for (int it = 0; it < 30; ++it) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng.integer(7));
    const Density d(random_density_matrix(rng, dim));
    CHECK(d.min_eigenvalue() >= kPsdFloor);
    CHECK(std::abs(trace(d.matrix()) - Complex(1.0)) < 1e-14);
  }
}

TEST_CASE("coherent state tail monitor") {
  CHECK_NOTHROW(coherent_state(Complex(1.0, 0.0), 40));
  // far too small a cutoff for this amplitude
  CHECK_THROWS_AS(coherent_state(Complex(3.0, 0.0), 6), std::invalid_argument);
  const CVector c = coherent_vector(Complex(1.0, 0.0), 40);
  CHECK(tail_mass(c) < 1e-30);
}
