#include <catch2/catch_amalgamated.hpp>

#include "exlab/density.hpp"
#include "exlab/lie.hpp"
#include "exlab/operators.hpp"
#include "exlab/random.hpp"
#include "support/oracles.hpp"

using namespace exlab;

namespace {

PhasePolynomial random_poly(Rng& rng, int dof, int max_degree, int terms) {
  PhasePolynomial poly(dof);
  for (int k = 0; k < terms; ++k) {
    Exponents e(static_cast<std::size_t>(2 * dof), 0);
    int budget = static_cast<int>(rng.integer(static_cast<std::uint64_t>(max_degree) + 1));
    while (budget > 0) {
      e[rng.integer(static_cast<std::uint64_t>(2 * dof))] += 1;
      --budget;
    }
    poly.add_term(e, mpq_class(static_cast<long>(rng.integer(13)) - 6,
                               static_cast<long>(rng.integer(4)) + 1));
  }
  return poly;
}

}  // namespace

TEST_CASE("quantum bracket on Pauli matrices") {
  // (i/hbar)[sx, sy] = (i)(2i sz) = -2 sz at hbar = 1
  const CMatrix bracket = lie_product(pauli_x(), pauli_y());
  CHECK(deviation(bracket, CMatrix(-2.0 * pauli_z())) < 1e-15);
}

TEST_CASE("bracket of a quantity with itself vanishes") {
  Rng rng(7);
  const CMatrix a = random_matrix(rng, 5);
  CHECK(max_abs(lie_product(a, a)) < 1e-15);
  const PhasePolynomial f = random_poly(rng, 2, 4, 6);
  CHECK(lie_product(f, f).is_zero());
}

TEST_CASE("canonical pair gives -1 in both realizations") {
  const PhasePolynomial q = PhasePolynomial::position(1);
  const PhasePolynomial p = PhasePolynomial::momentum(1);
  CHECK(lie_product(q, p) == PhasePolynomial::constant(1, -1));

  const OscillatorParams osc{1.0, 1.0};
  const Eigen::Index n = 30;
  const CMatrix qp = lie_product(position_op(n, osc), momentum_op(n, osc));
  // away from the truncation corner the bracket is exactly -identity
  for (Eigen::Index i = 0; i < n - 1; ++i)
    for (Eigen::Index j = 0; j < n - 1; ++j) {
      const Complex expected = i == j ? Complex(-1.0) : Complex(0.0);
      CHECK(std::abs(qp(i, j) - expected) < 1e-12);
    }
}

TEST_CASE("quantum algebra axioms hold to roundoff") {
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng.integer(7));
    const CMatrix a = random_matrix(rng, dim);
    const CMatrix b = random_matrix(rng, dim);
    const CMatrix c = random_matrix(rng, dim);
    REQUIRE(deviation(lie_product(a, b), CMatrix(-lie_product(b, a))) < 1e-12);
    REQUIRE(deviation(lie_product(a, CMatrix(b * c)),
                      CMatrix(lie_product(a, b) * c + b * lie_product(a, c))) < 1e-12);
    REQUIRE(deviation(lie_product(a, lie_product(b, c)),
                      CMatrix(lie_product(lie_product(a, b), c) +
                              lie_product(b, lie_product(a, c)))) < 1e-12);
    REQUIRE(std::abs(integral(lie_product(a, b))) < 1e-12);
    REQUIRE(std::abs(integral(CMatrix(lie_product(a, b) * c)) -
                     integral(CMatrix(a * lie_product(b, c)))) < 1e-12);
  }
}

TEST_CASE("classical algebra axioms hold exactly") {
  Rng rng(13);
  for (int it = 0; it < 30; ++it) {
    const int dof = 1 + static_cast<int>(rng.integer(2));
    const PhasePolynomial a = random_poly(rng, dof, 4, 5);
    const PhasePolynomial b = random_poly(rng, dof, 4, 5);
    const PhasePolynomial c = random_poly(rng, dof, 4, 5);
    REQUIRE((lie_product(a, b) + lie_product(b, a)).is_zero());
    REQUIRE((lie_product(a, b * c) -
             (lie_product(a, b) * c + b * lie_product(a, c)))
                .is_zero());
    REQUIRE((lie_product(a, lie_product(b, c)) -
             (lie_product(lie_product(a, b), c) +
              lie_product(b, lie_product(a, c))))
                .is_zero());
  }
}

TEST_CASE("hbar scales the quantum bracket") {
  set_hbar(0.5);
  const CMatrix bracket = lie_product(pauli_x(), pauli_y());
  CHECK(deviation(bracket, CMatrix(-4.0 * pauli_z())) < 1e-14);
  set_hbar(1.0);
}

TEST_CASE("trace integral") {
  CHECK(integral(identity(7)) == Complex(7.0));
  CHECK(std::abs(integral(pauli_z())) == 0.0);
}

TEST_CASE("enveloped canonical invariance and integration by parts are exact") {
  Rng rng(17);
  for (int it = 0; it < 25; ++it) {
    const int dof = 1 + static_cast<int>(rng.integer(2));
    const PhasePolynomial a = random_poly(rng, dof, 4, 4);
    const PhasePolynomial b = random_poly(rng, dof, 4, 4);
    const PhasePolynomial c = random_poly(rng, dof, 4, 4);
    const GaussianEnvelope g(a);
    REQUIRE(integral_classical_scaled(lie_product(g, b)) == 0);
    const mpq_class lhs = integral_classical_scaled(lie_product(g, b) * c);
    const mpq_class rhs = integral_classical_scaled(g * lie_product(b, c));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("enveloped integrals match Gauss-Hermite quadrature") {
  Rng rng(19);
  for (int it = 0; it < 10; ++it) {
    const PhasePolynomial a = random_poly(rng, 1, 4, 4);
    const PhasePolynomial b = random_poly(rng, 1, 4, 4);
    const GaussianEnvelope bracket = lie_product(GaussianEnvelope(a), b);
    const double closed = integral_classical(bracket);
    const double quad = oracle::enveloped_integral_quadrature(bracket.poly);
    const double scale = std::max(1.0, std::abs(quad));
    REQUIRE(std::abs(closed - quad) / scale < 1e-9);
    REQUIRE(std::abs(closed) < 1e-9 * scale);  // invariance, numerically

    const double plain = integral_classical(GaussianEnvelope(a * b));
    const double plain_quad = oracle::enveloped_integral_quadrature(a * b);
    REQUIRE(std::abs(plain - plain_quad) / std::max(1.0, std::abs(plain_quad)) < 1e-9);
  }
}

TEST_CASE("quantum expectations") {
  const Density mixed = Density::maximally_mixed(2);
  CHECK(std::abs(expectation(mixed, pauli_z())) < 1e-15);
  const Density up = Density::pure((CVector(2) << 1, 0).finished());
  CHECK(std::abs(expectation(up, pauli_z()) - Complex(1.0)) < 1e-15);

  Rng rng(23);
  for (int it = 0; it < 20; ++it) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng.integer(5));
    const Density rho(random_density_matrix(rng, dim));
    CHECK(std::abs(expectation(rho, identity(dim)) - Complex(1.0)) < 1e-12);
    CHECK(std::abs(expectation(rho, random_hermitian(rng, dim)).imag()) < 1e-12);
  }
}

TEST_CASE("classical Gaussian expectation: exact moments and MC oracle") {
  RVector mean(2);
  mean << 1.0, 0.0;
  const GaussianPhaseState state(mean, RMatrix::Identity(2, 2));
  const PhasePolynomial q = PhasePolynomial::position(1);
  const double q2 = expectation(state, q * q);
  CHECK(q2 == Catch::Approx(2.0).margin(1e-12));  // mean^2 + variance

  Rng rng(29);
  const double mc = oracle::gaussian_expectation_mc(state, q * q, 400000, rng);
  CHECK(std::abs(mc - q2) < 0.02);  // ~4 sigma of the MC estimate

  // normalization: E[1] = 1 for any valid state
  RMatrix cov(2, 2);
  cov << 2.0, 0.3, 0.3, 0.5;
  const GaussianPhaseState skewed(mean, cov);
  CHECK(expectation(skewed, PhasePolynomial::constant(1, 1)) == 1.0);
  // covariance couples the q p cross moment
  const PhasePolynomial p = PhasePolynomial::momentum(1);
  CHECK(expectation(skewed, q * p) == Catch::Approx(0.3).margin(1e-12));
}

TEST_CASE("dimension and realization mismatches are rejected") {
  CHECK_THROWS_AS(lie_product(pauli_x(), identity(3)), std::invalid_argument);
  PhasePolynomial one_dof = PhasePolynomial::position(1);
  PhasePolynomial two_dof = PhasePolynomial::position(2, 0);
  CHECK_THROWS_AS(lie_product(one_dof, two_dof), std::invalid_argument);
  const Density mixed = Density::maximally_mixed(2);
  CHECK_THROWS_AS(expectation(mixed, identity(3)), std::invalid_argument);
  CMatrix bad = pauli_x();
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(lie_product(bad, pauli_x()), std::invalid_argument);
}
