#include <catch2/catch_amalgamated.hpp>

#include "exlab/dynamics.hpp"
#include "exlab/operators.hpp"
#include "exlab/random.hpp"

using namespace exlab;

TEST_CASE("propagator basics") {
  Rng rng(37);
  const CMatrix h = random_hermitian(rng, 4);
  CHECK(deviation(propagator(h, 0.0), identity(4)) < 1e-14);

  for (int it = 0; it < 10; ++it) {
    const CMatrix g = random_hermitian(rng, 5);
    const double t = rng.uniform(0.0, 20.0);
    const CMatrix u = propagator(g, t);
    CHECK(deviation(CMatrix(u * u.adjoint()), identity(5)) < 1e-10);
  }

  // H = sigma_z, t = pi: U = diag(e^{-i pi}, e^{i pi}) = -identity
  const CMatrix u = propagator(pauli_z(), 3.14159265358979323846);
  CHECK(deviation(u, CMatrix(-identity(2))) < 1e-13);

  CHECK_THROWS_AS(propagator(CMatrix(Complex(0, 1) * pauli_x()), 1.0),
                  std::invalid_argument);
}

TEST_CASE("schroedinger and heisenberg splits freeze one side") {
  Rng rng(41);
  const CMatrix h = random_hermitian(rng, 4);
  const CMatrix a = random_hermitian(rng, 4);
  const Density rho(random_density_matrix(rng, 4));

  const auto [rho_s, a_s] = evolve_split(rho, a, GaugeSplit::schroedinger(h), 2.3);
  CHECK(deviation(a_s, a) == 0.0);  // untouched by construction
  const auto [rho_h, a_h] = evolve_split(rho, a, GaugeSplit::heisenberg(h), 2.3);
  CHECK(deviation(rho_h.matrix(), rho.matrix()) < 1e-13);

  // the Schroedinger state obeys the von Neumann equation
  const double t0 = 0.9, dt = 1e-4;
  const GaugeSplit split = GaugeSplit::schroedinger(h);
  const CMatrix plus = evolve_split(rho, a, split, t0 + dt).first.matrix();
  const CMatrix minus = evolve_split(rho, a, split, t0 - dt).first.matrix();
  const CMatrix rho_t = evolve_split(rho, a, split, t0).first.matrix();
  const CMatrix fd = (plus - minus) / (2.0 * dt);
  const CMatrix rhs = Complex(0, 1.0 / hbar()) * (rho_t * h - h * rho_t);
  CHECK(deviation(fd, rhs) < 1e-6);
}

TEST_CASE("expectations are independent of the gauge split") {
  Rng rng(43);
  for (int it = 0; it < 10; ++it) {
    const CMatrix h = random_hermitian(rng, 4);
    const CMatrix h1 = random_hermitian(rng, 4);
    const CMatrix a = random_hermitian(rng, 4);
    const Density rho(random_density_matrix(rng, 4));
    const GaugeSplit splits[] = {GaugeSplit::schroedinger(h),
                                 GaugeSplit::heisenberg(h),
                                 GaugeSplit::interaction(h, h1)};
    for (double t = 0.0; t <= 10.0; t += 1.0) {
      const Complex ref = expectation_at(rho, a, splits[0], t);
      CHECK(std::abs(expectation_at(rho, a, splits[1], t) - ref) < 1e-10);
      CHECK(std::abs(expectation_at(rho, a, splits[2], t) - ref) < 1e-10);
    }
  }
}

TEST_CASE("state stays valid and energy is conserved") {
  Rng rng(47);
  const CMatrix h = random_hermitian(rng, 4);
  const CMatrix h1 = random_hermitian(rng, 4);
  const Density rho(random_density_matrix(rng, 4));
  const GaugeSplit split = GaugeSplit::interaction(h, h1);
  const Complex e0 = expectation(rho, h);
  for (double t = 0.5; t <= 10.0; t += 0.5) {
    const auto [rho_t, h_t] = evolve_split(rho, h, split, t);
    CHECK(std::abs(trace(rho_t.matrix()) - Complex(1.0)) < 1e-10);
    CHECK(rho_t.min_eigenvalue() >= kPsdFloor);
    CHECK(std::abs(expectation(rho_t, h_t) - e0) < 1e-10);
  }
}

TEST_CASE("ehrenfest rhs matches re-anchored finite differences") {
  Rng rng(53);
  for (int it = 0; it < 10; ++it) {
    const CMatrix h = random_hermitian(rng, 4);
    const CMatrix h1 = random_hermitian(rng, 4);
    const CMatrix a = random_hermitian(rng, 4);
    const Density rho(random_density_matrix(rng, 4));
    const GaugeSplit split = GaugeSplit::interaction(h, h1);
    const double dt = 1e-4;
    const Complex fd = (expectation_at(rho, a, split, dt) -
                        expectation_at(rho, a, split, -dt)) /
                       (2.0 * dt);
    CHECK(std::abs(fd - ehrenfest_rhs(rho, a, h)) < 1e-6);
    CHECK(std::abs(ehrenfest_rhs(rho, h, h)) < 1e-12);  // energy conservation
  }
}

TEST_CASE("ehrenfest rhs on the oscillator reproduces the classical form") {
  const Eigen::Index n = 40;
  const OscillatorParams osc{1.0, 1.0};
  const CMatrix q = position_op(n, osc);
  const CMatrix p = momentum_op(n, osc);
  const CMatrix h = oscillator_hamiltonian(n, osc);
  const Density rho = coherent_state(Complex(0.7, -0.2), n);
  const Complex dq = ehrenfest_rhs(rho, q, h);
  const Complex dp = ehrenfest_rhs(rho, p, h);
  CHECK(std::abs(dq - expectation(rho, p) / osc.mass) < 1e-8);
  CHECK(std::abs(dp + osc.mass * osc.omega * osc.omega * expectation(rho, q)) < 1e-8);
}

TEST_CASE("time-shift covariance in the Heisenberg picture") {
  Rng rng(59);
  const CMatrix h = random_hermitian(rng, 4);
  const CMatrix phi = random_hermitian(rng, 4);
  const Density rho(random_density_matrix(rng, 4));

  CHECK(heisenberg_time_shift_check(rho, phi, h, 0.4, 0.4, 2.0));  // s = t
  CHECK(heisenberg_time_shift_check(rho, phi, h, 0.7, 0.3, 1.1));

  // oscillator with phi = q: both sides equal the analytic rotation
  const Eigen::Index n = 40;
  const OscillatorParams osc{1.0, 1.0};
  const CMatrix q = position_op(n, osc);
  const CMatrix ho = oscillator_hamiltonian(n, osc);
  const Density coh = coherent_state(Complex(0.5, 0.1), n);
  const Complex q0 = expectation(coh, q);
  const Complex p0 = expectation(coh, momentum_op(n, osc));
  for (const auto& [s, t, u] : std::vector<std::array<double, 3>>{
           {0.7, 0.3, 1.1}, {2.0, 0.1, 0.4}, {0.0, 1.0, 2.0}}) {
    CHECK(heisenberg_time_shift_check(coh, q, ho, s, t, u));
    const Complex lhs = two_time_expectation(coh, q, ho, s, u);
    const double w = osc.omega * (u + s);
    const Complex analytic =
        q0 * std::cos(w) + p0 * std::sin(w) / (osc.mass * osc.omega);
    CHECK(std::abs(lhs - analytic) < 1e-8);
  }
}

TEST_CASE("trajectories carry expectations and uncertainties") {
  const CMatrix h = 0.5 * pauli_z();
  const Density plus = Density::pure(plus_vector());
  const std::vector<double> times = linspace(0.0, 6.0, 60);
  const Trajectory traj = simulate_trajectory(
      plus, GaugeSplit::schroedinger(h), {{"sx", pauli_x()}, {"sz", pauli_z()}},
      times);
  REQUIRE(traj.series.size() == 2);
  for (std::size_t k = 0; k < times.size(); ++k) {
    // <sx>_t = cos t for H = sz/2 starting from |+><+|
    CHECK(std::abs(traj.series[0].values[k] - Complex(std::cos(times[k]))) < 1e-10);
    CHECK(traj.series[0].sigmas[k] ==
          Catch::Approx(std::abs(std::sin(times[k]))).margin(1e-10));
  }

  // zero-length window gives a single row
  const Trajectory point = simulate_trajectory(
      plus, GaugeSplit::schroedinger(h), {{"sx", pauli_x()}}, linspace(2.0, 2.0, 50));
  CHECK(point.times.size() == 1);
  CHECK(point.times[0] == 2.0);
}

TEST_CASE("gauge split validation") {
  CHECK_THROWS_AS(GaugeSplit(pauli_x(), identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(GaugeSplit(CMatrix(Complex(0, 1) * pauli_x()), pauli_z()),
                  std::invalid_argument);
  Rng rng(61);
  const Density rho(random_density_matrix(rng, 2));
  CHECK_THROWS_AS(evolve_split(rho, identity(3), GaugeSplit::schroedinger(pauli_z()), 1.0),
                  std::invalid_argument);
}
