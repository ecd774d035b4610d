#include <catch2/catch_amalgamated.hpp>

#include "exlab/moments.hpp"
#include "exlab/operators.hpp"
#include "support/oracles.hpp"

using namespace exlab;

namespace {

MomentState coherent_moments(Complex alpha, const OscillatorParams& osc) {
  // <q> = sqrt(2 hbar / m w) Re alpha, <p> = sqrt(2 hbar m w) Im alpha,
  // var_q = hbar/(2 m w), var_p = hbar m w / 2, sym cross moment
  // <qp+pq>/2 - <q><p> = hbar Im(alpha^2) ... here alpha is kept real or
  // the cross term is taken from the exact matrix elements instead.
  const Eigen::Index n = 40;
  const Density rho = coherent_state(alpha, n);
  return extract_moments(rho, {position_op(n, osc)}, {momentum_op(n, osc)});
}

}  // namespace

TEST_CASE("zero time is the identity on moments") {
  RVector first(2);
  first << 0.3, -1.1;
  RMatrix second(2, 2);
  second << 1.2, 0.1, 0.1, 0.8;
  second += first * first.transpose();
  const MomentState m0(first, second);
  const MomentState m1 = evolve_moments_quadratic(m0, {1.0, 1.0}, 0.0);
  CHECK((m1.first - m0.first).cwiseAbs().maxCoeff() == 0.0);
  CHECK((m1.second - m0.second).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("harmonic quarter period swaps position into momentum") {
  RVector first(2);
  first << 1.0, 0.0;
  RMatrix second = RMatrix::Identity(2, 2) * 0.5;
  second += first * first.transpose();
  const MomentState m0(first, second);
  const double quarter = 0.5 * 3.14159265358979323846;
  const MomentState m1 = evolve_moments_quadratic(m0, {1.0, 1.0}, quarter);
  CHECK(m1.first(0) == Catch::Approx(0.0).margin(1e-15));
  CHECK(m1.first(1) == Catch::Approx(-1.0).margin(1e-15));
}

TEST_CASE("coherent state second moments are stationary") {
  const OscillatorParams osc{1.0, 1.0};
  const MomentState m0 = coherent_moments(Complex(0.8, 0.0), osc);
  for (double t : {0.5, 1.7, 4.0}) {
    const MomentState mt = evolve_moments_quadratic(m0, osc, t);
    const RMatrix c0 = m0.covariance();
    const RMatrix ct = mt.covariance();
    CHECK((ct - c0).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("moment flow agrees with the full Fock evolution") {
  const Eigen::Index n = 40;
  const OscillatorParams osc{1.0, 1.0};
  const CMatrix q = position_op(n, osc);
  const CMatrix p = momentum_op(n, osc);
  const CMatrix h = oscillator_hamiltonian(n, osc);
  const Density rho = coherent_state(Complex(0.8, 0.3), n);
  const MomentState m0 = extract_moments(rho, {q}, {p});
  const GaugeSplit split = GaugeSplit::schroedinger(h);
  for (double t : {0.3, 1.1, 2.9}) {
    const MomentState predicted = evolve_moments_quadratic(m0, osc, t);
    const Density rho_t = evolve_split(rho, q, split, t).first;
    const MomentState extracted = extract_moments(rho_t, {q}, {p});
    CHECK((predicted.first - extracted.first).cwiseAbs().maxCoeff() < 1e-6);
    CHECK((predicted.second - extracted.second).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("free particle variance growth matches the analytic law and the ring oracle") {
  const double sigma0 = 1.0;
  RVector first = RVector::Zero(2);
  RMatrix second(2, 2);
  // minimum-uncertainty packet: var_q = sigma0^2, var_p = 1/(4 sigma0^2)
  second << sigma0 * sigma0, 0.0, 0.0, 0.25 / (sigma0 * sigma0);
  const MomentState m0(first, second);
  const OscillatorParams free{1.0, 0.0};
  const std::vector<double> times{0.0, 0.5, 1.0, 1.5, 2.0};
  std::vector<double> predicted;
  for (double t : times) {
    const MomentState mt = evolve_moments_quadratic(m0, free, t);
    predicted.push_back(std::sqrt(mt.covariance()(0, 0)));
    const double analytic =
        std::sqrt(sigma0 * sigma0 + 0.25 * t * t / (sigma0 * sigma0));
    CHECK(predicted.back() == Catch::Approx(analytic).margin(1e-12));
  }
  // independent route: plane-wave evolution on a ring
  const std::vector<double> lattice =
      oracle::free_packet_sigma_on_ring(sigma0, times);
  for (std::size_t k = 0; k < times.size(); ++k)
    CHECK(std::abs(lattice[k] - predicted[k]) < 2e-3);
  // monotone spreading
  for (std::size_t k = 0; k + 1 < predicted.size(); ++k)
    CHECK(predicted[k + 1] > predicted[k]);
}

TEST_CASE("moment state validation") {
  RVector first = RVector::Zero(2);
  RMatrix asym(2, 2);
  asym << 1.0, 0.2, -0.2, 1.0;
  CHECK_THROWS_AS(MomentState(first, asym), std::invalid_argument);
  RMatrix indef(2, 2);
  indef << 1.0, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(MomentState(first, indef), std::invalid_argument);
  CHECK_THROWS_AS(evolve_moments_quadratic(
                      MomentState(first, RMatrix::Identity(2, 2)), {0.0, 1.0}, 1.0),
                  std::invalid_argument);  // nonpositive mass
}
