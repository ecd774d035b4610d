#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "exlab/common.hpp"
#include "exlab/density.hpp"
#include "exlab/dynamics.hpp"
#include "exlab/lie.hpp"
#include "exlab/moments.hpp"
#include "exlab/operators.hpp"
#include "exlab/polynomial.hpp"
#include "exlab/prob.hpp"
#include "exlab/qstats.hpp"
#include "exlab/random.hpp"
#include "exlab/serialize.hpp"
#include "exlab/uncertainty.hpp"
#include "exlab/worldtube.hpp"

// Randomized verification suites. Every check row carries a stable law
// identifier naming the identity it exercises, a measured residual and the
// tolerance it must meet. Reports are deterministic for a fixed seed.

namespace exlab {

struct Check {
  std::string id;
  std::string law;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  void add(const std::string& id, const std::string& law, double residual,
           double tolerance) {
    checks.push_back({id, law, residual, tolerance, residual <= tolerance});
  }

  int failures() const {
    int n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }

  bool all_pass() const { return failures() == 0; }
};

inline Json report_to_json(const VerificationReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  Json rows = Json::array();
  for (const auto& c : r.checks) {
    Json row;
    row["id"] = c.id;
    row["law"] = c.law;
    row["residual"] = c.residual;
    row["tolerance"] = c.tolerance;
    row["pass"] = c.pass;
    rows.push_back(std::move(row));
  }
  j["checks"] = std::move(rows);
  j["failures"] = r.failures();
  return j;
}

inline std::string report_to_text(const VerificationReport& r) {
  std::string out = "suite " + r.suite + "  seed " + std::to_string(r.seed) + "\n";
  for (const auto& c : r.checks) {
    char line[256];
    std::snprintf(line, sizeof(line), "%s  %-38s law=%-28s residual=%.3e tol=%.3e\n",
                  c.pass ? "PASS" : "FAIL", c.id.c_str(), c.law.c_str(),
                  c.residual, c.tolerance);
    out += line;
  }
  out += std::to_string(r.checks.size() - static_cast<std::size_t>(r.failures())) +
         "/" + std::to_string(r.checks.size()) + " checks passed\n";
  return out;
}

namespace detail {

// the canonical frequency experiments: p = 0.1, p = 1/2 from a maximally
// mixed state, and p = |<phi|psi>|^2 = 1/2 from a binary state test
inline std::vector<std::pair<Density, QuantumStatement>>
canonical_frequency_experiments() {
  CMatrix biased = CMatrix::Zero(2, 2);
  biased(0, 0) = 0.1;
  biased(1, 1) = 0.9;
  CMatrix proj = CMatrix::Zero(2, 2);
  proj(0, 0) = 1.0;
  const QuantumStatement p0{proj};
  CMatrix px(2, 2);
  px << 0, 1, 1, 0;
  return {{Density(biased), p0},
          {Density::maximally_mixed(2), p0},
          {Density::pure((CVector(2) << 1, 0).finished()),
           QuantumStatement(0.5 * (identity(2) + px))}};
}

inline PhasePolynomial random_poly(Rng& rng, int dof, int max_degree,
                                   int terms) {
  PhasePolynomial poly(dof);
  for (int k = 0; k < terms; ++k) {
    Exponents e(static_cast<std::size_t>(2 * dof), 0);
    int budget = static_cast<int>(rng.integer(static_cast<std::uint64_t>(max_degree) + 1));
    while (budget > 0) {
      e[rng.integer(static_cast<std::uint64_t>(2 * dof))] += 1;
      --budget;
    }
    const long num = static_cast<long>(rng.integer(13)) - 6;  // -6..6
    const long den = static_cast<long>(rng.integer(4)) + 1;   // 1..4
    poly.add_term(e, mpq_class(num, den));
  }
  return poly;
}

inline double poly_residual(const PhasePolynomial& p) {
  return p.is_zero() ? 0.0 : std::max(p.max_coeff_abs(), 1.0);
}

}  // namespace detail

// Lie-algebra axioms in both realizations, integral identities, and the
// expectation functional.
inline VerificationReport verify_lie(std::uint64_t seed) {
  VerificationReport r;
  r.suite = "lie";
  r.seed = seed;
  Rng rng(seed);

  // quantum axioms on random (not necessarily Hermitian) matrices
  double anti = 0, prod = 0, jacobi = 0, self = 0, trinv = 0, ibp = 0;
  for (int it = 0; it < 40; ++it) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng.integer(7));
    const CMatrix a = random_matrix(rng, dim);
    const CMatrix b = random_matrix(rng, dim);
    const CMatrix c = random_matrix(rng, dim);
    anti = std::max(anti, deviation(lie_product(a, b), CMatrix(-lie_product(b, a))));
    prod = std::max(prod, deviation(lie_product(a, CMatrix(b * c)),
                                    CMatrix(lie_product(a, b) * c + b * lie_product(a, c))));
    jacobi = std::max(jacobi,
                      deviation(lie_product(a, lie_product(b, c)),
                                CMatrix(lie_product(lie_product(a, b), c) +
                                        lie_product(b, lie_product(a, c)))));
    self = std::max(self, max_abs(lie_product(a, a)));
    trinv = std::max(trinv, std::abs(integral(lie_product(a, b))));
    ibp = std::max(ibp, std::abs(integral(CMatrix(lie_product(a, b) * c)) -
                                 integral(CMatrix(a * lie_product(b, c)))));
  }
  r.add("quantum.anticommutativity", "lie-anticommutativity", anti, 1e-12);
  r.add("quantum.self-annihilation", "lie-anticommutativity", self, 1e-12);
  r.add("quantum.product-rule", "lie-product-rule", prod, 1e-12);
  r.add("quantum.jacobi", "lie-jacobi", jacobi, 1e-12);
  r.add("quantum.bracket-trace-vanishes", "canonical-invariance", trinv, 1e-12);
  r.add("quantum.integration-by-parts", "integration-by-parts", ibp, 1e-12);
  r.add("quantum.pauli-bracket", "quantum-lie-bracket",
        deviation(lie_product(pauli_x(), pauli_y()), CMatrix(-2.0 * pauli_z())),
        1e-12);

  {
    // canonical pair on the truncated Fock basis; the truncation corner
    // (last row/column) is excluded, no finite matrix pair satisfies the
    // canonical bracket there
    const Eigen::Index n = 40;
    const OscillatorParams osc;
    const CMatrix qp = lie_product(position_op(n, osc), momentum_op(n, osc));
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n - 1; ++i)
      for (Eigen::Index j = 0; j < n - 1; ++j)
        worst = std::max(worst, std::abs(qp(i, j) - (i == j ? Complex(-1) : Complex(0))));
    r.add("quantum.canonical-pair", "quantum-lie-bracket", worst, 1e-12);
  }
  r.add("quantum.trace-identity", "trace-integral",
        std::max(std::abs(integral(identity(5)) - Complex(5.0)),
                 std::abs(integral(pauli_z()))),
        1e-12);

  // classical axioms, exact rational arithmetic
  double c_anti = 0, c_prod = 0, c_jacobi = 0, c_inv = 0, c_ibp = 0;
  for (int it = 0; it < 30; ++it) {
    const int dof = 1 + static_cast<int>(rng.integer(2));
    const PhasePolynomial a = detail::random_poly(rng, dof, 4, 5);
    const PhasePolynomial b = detail::random_poly(rng, dof, 4, 5);
    const PhasePolynomial c = detail::random_poly(rng, dof, 4, 5);
    c_anti = std::max(c_anti,
                      detail::poly_residual(lie_product(a, b) + lie_product(b, a)));
    c_prod = std::max(c_prod,
                      detail::poly_residual(lie_product(a, b * c) -
                                            (lie_product(a, b) * c + b * lie_product(a, c))));
    c_jacobi = std::max(
        c_jacobi, detail::poly_residual(lie_product(a, lie_product(b, c)) -
                                        (lie_product(lie_product(a, b), c) +
                                         lie_product(b, lie_product(a, c)))));
    const mpq_class inv = integral_classical_scaled(
        lie_product(GaussianEnvelope(a), b));
    c_inv = std::max(c_inv, std::abs(inv.get_d()));
    const mpq_class lhs = integral_classical_scaled(
        lie_product(GaussianEnvelope(a), b) * c);
    const mpq_class rhs = integral_classical_scaled(
        GaussianEnvelope(a) * lie_product(b, c));
    c_ibp = std::max(c_ibp, std::abs(mpq_class(lhs - rhs).get_d()));
  }
  r.add("classical.anticommutativity", "lie-anticommutativity", c_anti, 0.0);
  r.add("classical.product-rule", "lie-product-rule", c_prod, 0.0);
  r.add("classical.jacobi", "lie-jacobi", c_jacobi, 0.0);
  r.add("classical.canonical-invariance", "canonical-invariance", c_inv, 0.0);
  r.add("classical.integration-by-parts", "integration-by-parts", c_ibp, 0.0);

  {
    // q <| p = -1 in both realizations
    const PhasePolynomial q = PhasePolynomial::position(1);
    const PhasePolynomial p = PhasePolynomial::momentum(1);
    const PhasePolynomial expected = PhasePolynomial::constant(1, -1);
    r.add("classical.canonical-pair", "classical-lie-product",
          detail::poly_residual(lie_product(q, p) - expected), 0.0);
  }
  {
    const double two_pi = 2.0 * 3.14159265358979323846;
    double worst = 0.0;
    for (int dof = 1; dof <= 2; ++dof) {
      const GaussianEnvelope unit(PhasePolynomial::constant(dof, 1));
      worst = std::max(worst, std::abs(integral_classical(unit) -
                                       std::pow(two_pi, dof)) /
                                  std::pow(two_pi, dof));
    }
    r.add("classical.liouville-normalization", "liouville-integral", worst, 1e-12);
    const GaussianEnvelope odd(PhasePolynomial::position(1));
    r.add("classical.odd-moment", "liouville-integral",
          std::abs(integral_classical(odd)), 0.0);
  }

  // the expectation functional
  double unit_res = 0, herm_res = 0;
  for (int it = 0; it < 20; ++it) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng.integer(5));
    const Density rho(random_density_matrix(rng, dim));
    unit_res = std::max(unit_res,
                        std::abs(expectation(rho, identity(dim)) - Complex(1.0)));
    herm_res = std::max(herm_res,
                        std::abs(expectation(rho, random_hermitian(rng, dim)).imag()));
  }
  r.add("expectation.unit", "state-expectation", unit_res, 1e-12);
  r.add("expectation.hermitian-real", "state-expectation", herm_res, 1e-12);
  {
    const Density mixed = Density::maximally_mixed(2);
    const Density up = Density::pure((CVector(2) << 1, 0).finished());
    const double spin = std::max(std::abs(expectation(mixed, pauli_z())),
                                 std::abs(expectation(up, pauli_z()) - Complex(1.0)));
    r.add("expectation.spin", "state-expectation", spin, 1e-12);
    RVector mean(2);
    mean << 1.0, 0.0;
    const GaussianPhaseState g(mean, RMatrix::Identity(2, 2));
    const PhasePolynomial q = PhasePolynomial::position(1);
    r.add("expectation.classical-gaussian", "state-expectation",
          std::abs(expectation(g, q * q) - 2.0), 1e-12);
  }
  return r;
}

// Propagators, gauge splits, picture equivalence, the expectation-level
// bracket, the moment hierarchy, and time-shift covariance.
inline VerificationReport verify_pictures(std::uint64_t seed) {
  VerificationReport r;
  r.suite = "pictures";
  r.seed = seed;
  Rng rng(seed);

  double id_res = 0, unit_res = 0;
  for (int it = 0; it < 15; ++it) {
    const CMatrix h = random_hermitian(rng, 4);
    id_res = std::max(id_res, deviation(propagator(h, 0.0), identity(4)));
    const CMatrix u = propagator(h, rng.uniform(0.0, 10.0));
    unit_res = std::max(unit_res, deviation(CMatrix(u * u.adjoint()), identity(4)));
  }
  r.add("propagator.identity-at-zero", "von-neumann-equation", id_res, 1e-12);
  r.add("propagator.unitarity", "von-neumann-equation", unit_res, 1e-10);
  {
    const CMatrix u = propagator(pauli_z(), 3.14159265358979323846);
    CMatrix expected(2, 2);
    const double angle = 3.14159265358979323846 / hbar();
    expected << Complex(std::cos(angle), -std::sin(angle)), 0, 0,
        Complex(std::cos(angle), std::sin(angle));
    r.add("propagator.spectral", "von-neumann-equation", deviation(u, expected),
          1e-12);
  }
  {
    // d rho/dt = (i/hbar)[rho, H] by central finite difference
    const CMatrix h = random_hermitian(rng, 4);
    const Density rho(random_density_matrix(rng, 4));
    const GaugeSplit split = GaugeSplit::schroedinger(h);
    const double t0 = 0.8, dt = 1e-4;
    const CMatrix plus = evolve_split(rho, identity(4), split, t0 + dt).first.matrix();
    const CMatrix minus = evolve_split(rho, identity(4), split, t0 - dt).first.matrix();
    const CMatrix rho_t = evolve_split(rho, identity(4), split, t0).first.matrix();
    const CMatrix fd = (plus - minus) / (2.0 * dt);
    const CMatrix rhs = Complex(0, 1.0 / hbar()) * (rho_t * h - h * rho_t);
    r.add("von-neumann.finite-difference", "von-neumann-equation",
          deviation(fd, rhs), 1e-6);
  }

  double schro = 0, heis = 0, inter = 0, indep = 0, trace_res = 0, state_res = 0,
         energy_res = 0;
  for (int it = 0; it < 10; ++it) {
    const CMatrix h = random_hermitian(rng, 4);
    const CMatrix h1 = random_hermitian(rng, 4);
    const CMatrix a = random_hermitian(rng, 4);
    const Density rho(random_density_matrix(rng, 4));
    const GaugeSplit splits[3] = {GaugeSplit::schroedinger(h),
                                  GaugeSplit::heisenberg(h),
                                  GaugeSplit::interaction(h, h1)};
    const double t_probe = rng.uniform(0.5, 3.0);
    schro = std::max(schro,
                     deviation(evolve_split(rho, a, splits[0], t_probe).second, a));
    heis = std::max(heis, deviation(evolve_split(rho, a, splits[1], t_probe).first.matrix(),
                                    rho.matrix()));
    const Complex ref = expectation_at(rho, a, splits[0], t_probe);
    inter = std::max(inter, std::abs(expectation_at(rho, a, splits[2], t_probe) - ref));
    const Complex e0 = expectation(rho, h);
    for (double t = 0.0; t <= 10.0; t += 0.5) {
      Complex values[3];
      for (int k = 0; k < 3; ++k) {
        const auto [rho_t, a_t] = evolve_split(rho, a, splits[k], t);
        values[k] = expectation(rho_t, a_t);
        trace_res = std::max(trace_res, std::abs(trace(rho_t.matrix()) - Complex(1.0)));
        state_res = std::max(state_res, hermiticity_defect(rho_t.matrix()));
        const auto [rho_h, h_t] = evolve_split(rho, h, splits[k], t);
        energy_res = std::max(energy_res, std::abs(expectation(rho_h, h_t) - e0));
      }
      indep = std::max({indep, std::abs(values[0] - values[1]),
                        std::abs(values[0] - values[2])});
    }
  }
  r.add("split.schroedinger-quantity-fixed", "schroedinger-picture", schro, 1e-12);
  r.add("split.heisenberg-state-fixed", "heisenberg-picture", heis, 1e-12);
  r.add("split.interaction-agreement", "interaction-picture", inter, 1e-10);
  r.add("edyn.split-independence", "expectation-dynamics", indep, 1e-10);
  r.add("edyn.trace-preservation", "state-evolution", trace_res, 1e-10);
  r.add("edyn.state-validity", "state-evolution", state_res, 1e-10);
  r.add("energy.conservation", "expectation-dynamics", energy_res, 1e-10);

  {
    // instantaneous generators of the two halves of a split
    const CMatrix h = random_hermitian(rng, 4);
    const CMatrix h1 = random_hermitian(rng, 4);
    const CMatrix a = random_hermitian(rng, 4);
    const Density rho(random_density_matrix(rng, 4));
    const GaugeSplit split = GaugeSplit::interaction(h, h1);
    const double dt = 1e-4;
    const CMatrix a_plus = evolve_split(rho, a, split, dt).second;
    const CMatrix a_minus = evolve_split(rho, a, split, -dt).second;
    const CMatrix fd_a = (a_plus - a_minus) / (2.0 * dt);
    r.add("esc.quantity-generator", "quantity-evolution",
          deviation(fd_a, lie_product(h1, a)), 1e-6);
    const CMatrix r_plus = evolve_split(rho, a, split, dt).first.matrix();
    const CMatrix r_minus = evolve_split(rho, a, split, -dt).first.matrix();
    const CMatrix fd_rho = (r_plus - r_minus) / (2.0 * dt);
    const CMatrix h2 = split.h2;
    const CMatrix rhs = Complex(0, 1.0 / hbar()) *
                        (rho.matrix() * h2 - h2 * rho.matrix());
    r.add("esc.state-generator", "state-evolution", deviation(fd_rho, rhs), 1e-6);
  }

  {
    // d/dt<A> = <H <| A>, re-anchored central difference at the current pair
    double fd_res = 0, lie_res = 0, energy_rate = 0;
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
      fd_res = std::max(fd_res, std::abs(fd - ehrenfest_rhs(rho, a, h)));
      energy_rate = std::max(energy_rate, std::abs(ehrenfest_rhs(rho, h, h)));
      // the bracket on expectations inherits antisymmetry and Jacobi
      const CMatrix b = random_hermitian(rng, 4);
      const CMatrix c = random_hermitian(rng, 4);
      lie_res = std::max(lie_res,
                         std::abs(expectation(rho, lie_product(a, b)) +
                                  expectation(rho, lie_product(b, a))));
      lie_res = std::max(
          lie_res, std::abs(expectation(rho, lie_product(a, lie_product(b, c))) -
                            expectation(rho, CMatrix(lie_product(lie_product(a, b), c) +
                                                     lie_product(b, lie_product(a, c))))));
    }
    r.add("ehrenfest.finite-difference", "ehrenfest-equation", fd_res, 1e-6);
    r.add("ehrenfest.energy-rate", "ehrenfest-equation", energy_rate, 1e-12);
    r.add("expectation.bracket-laws", "expectation-lie-bracket", lie_res, 1e-12);
  }

  {
    // oscillator: d<q>/dt = <p>/m and d<p>/dt = -m omega^2 <q>
    const Eigen::Index n = 40;
    const OscillatorParams osc{1.3, 0.9};
    const CMatrix q = position_op(n, osc);
    const CMatrix p = momentum_op(n, osc);
    const CMatrix h = oscillator_hamiltonian(n, osc);
    const Density rho = coherent_state(Complex(0.8, 0.0), n);
    const Complex dq = ehrenfest_rhs(rho, q, h);
    const Complex dp = ehrenfest_rhs(rho, p, h);
    const Complex q0 = expectation(rho, q);
    const Complex p0 = expectation(rho, p);
    r.add("ehrenfest.oscillator-position", "ehrenfest-position-momentum",
          std::abs(dq - p0 / osc.mass), 1e-8);
    r.add("ehrenfest.oscillator-momentum", "ehrenfest-position-momentum",
          std::abs(dp + osc.mass * osc.omega * osc.omega * q0), 1e-8);

    // closed moment flow against the full evolution
    const MomentState m0 = extract_moments(rho, {q}, {p});
    const GaugeSplit split = GaugeSplit::schroedinger(h);
    double closure = 0.0;
    for (double t : {0.0, 0.7, 2.1}) {
      const MomentState predicted = evolve_moments_quadratic(m0, osc, t);
      const Density rho_t = evolve_split(rho, q, split, t).first;
      const MomentState extracted = extract_moments(rho_t, {q}, {p});
      closure = std::max(closure,
                         (predicted.first - extracted.first).cwiseAbs().maxCoeff());
      closure = std::max(closure,
                         (predicted.second - extracted.second).cwiseAbs().maxCoeff());
    }
    r.add("moments.quadratic-closure", "ehrenfest-position-momentum", closure, 1e-6);

    // time-shift covariance, oscillator with phi = q, against the analytic
    // rotation of the initial moments
    double shift_res = 0.0;
    for (const auto& [s, t, u] : std::vector<std::array<double, 3>>{
             {0.7, 0.3, 1.1}, {1.9, 0.2, 0.5}, {0.0, 2.0, 3.0}}) {
      const Complex lhs = two_time_expectation(rho, q, h, s, u);
      const Complex rhs = two_time_expectation(rho, q, h, t, u + s - t);
      shift_res = std::max(shift_res, std::abs(lhs - rhs));
      const double w = osc.omega * (u + s);
      const Complex analytic = q0 * std::cos(w) +
                               p0 * std::sin(w) / (osc.mass * osc.omega);
      shift_res = std::max(shift_res, std::abs(lhs - analytic));
    }
    r.add("heisenberg.time-shift-oscillator", "heisenberg-time-shift", shift_res,
          1e-8);
  }
  {
    double shift_res = 0.0;
    for (int it = 0; it < 10; ++it) {
      const CMatrix h = random_hermitian(rng, 4);
      const CMatrix phi = random_hermitian(rng, 4);
      const Density rho(random_density_matrix(rng, 4));
      const Complex lhs = two_time_expectation(rho, phi, h, 0.7, 1.1);
      const Complex rhs = two_time_expectation(rho, phi, h, 0.3, 1.1 + 0.7 - 0.3);
      shift_res = std::max(shift_res, std::abs(lhs - rhs));
    }
    r.add("heisenberg.time-shift-random", "heisenberg-time-shift", shift_res, 1e-10);
  }
  return r;
}

inline VerificationReport verify_uncertainty(std::uint64_t seed) {
  VerificationReport r;
  r.suite = "uncertainty";
  r.seed = seed;
  Rng rng(seed);

  double two_routes = 0, eigen_sigma = 0, nonherm = 0;
  for (int it = 0; it < 30; ++it) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng.integer(5));
    const Density rho(random_density_matrix(rng, dim));
    const CMatrix a = random_hermitian(rng, dim);
    two_routes = std::max(two_routes, std::abs(uncertain_value(rho, a).sigma -
                                               sigma_uncentered(rho, a)));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
    const Density eig = Density::pure(es.eigenvectors().col(0));
    eigen_sigma = std::max(eigen_sigma, uncertain_value(eig, a).sigma);
    const CMatrix g = random_matrix(rng, dim);
    const Complex mean = expectation(rho, g);
    const double direct = std::sqrt(std::max(
        0.0, trace_product(rho.matrix(), CMatrix(g.adjoint() * g)).real() -
                 std::norm(mean)));
    nonherm = std::max(nonherm, std::abs(uncertain_value(rho, g).sigma - direct));
  }
  r.add("sigma.two-routes", "uncertainty-definition", two_routes, 1e-10);
  r.add("sigma.eigenstate", "uncertainty-definition", eigen_sigma, 1e-12);
  r.add("sigma.nonhermitian", "uncertainty-nonhermitian", nonherm, 1e-10);
  {
    const UncertainValue uv = uncertain_value(Density::maximally_mixed(2), pauli_z());
    r.add("sigma.maximally-mixed-spin", "uncertainty-definition",
          std::max(std::abs(uv.value), std::abs(uv.sigma - 1.0)), 1e-12);
  }

  double slack_violation = 0;
  for (int it = 0; it < 200; ++it) {
    const Density rho(random_density_matrix(rng, 4));
    const CMatrix a = random_hermitian(rng, 4);
    const CMatrix b = random_hermitian(rng, 4);
    const RobertsonResult rr = robertson_check(rho, a, b);
    slack_violation = std::max(slack_violation, std::max(0.0, rr.rhs - rr.lhs));
  }
  r.add("robertson.random", "robertson-inequality", slack_violation, 1e-10);
  {
    const Density rho(random_density_matrix(rng, 4));
    const CMatrix a = random_hermitian(rng, 4);
    const CMatrix b = a * a + 2.0 * a;  // commutes with a
    const RobertsonResult rr = robertson_check(rho, a, hermitize(b));
    r.add("robertson.commuting", "robertson-inequality", rr.rhs, 1e-12);
  }
  {
    const Eigen::Index n = 40;
    const OscillatorParams osc;
    const CMatrix q = position_op(n, osc);
    const CMatrix p = momentum_op(n, osc);
    const Density ground = fock_ground_state(n);
    const double prod = uncertain_value(ground, q).sigma *
                        uncertain_value(ground, p).sigma;
    r.add("robertson.ground-state-saturation", "heisenberg-uncertainty",
          std::abs(prod - 0.5 * hbar()), 1e-9);

    double bound_violation = 0.0;
    std::vector<Density> states = {ground, coherent_state(Complex(0.7, 0.0), n),
                                   coherent_state(Complex(-0.4, 0.3), n)};
    CVector cat = CVector::Zero(n);
    cat(0) = 1.0 / std::sqrt(2.0);
    cat(1) = 1.0 / std::sqrt(2.0);
    states.push_back(Density::pure(cat));
    RVector diag = RVector::Zero(n);
    for (Eigen::Index k = 0; k < 6; ++k) diag(k) = std::pow(0.4, double(k));
    CMatrix thermal = CMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) thermal(k, k) = diag(k) / diag.sum();
    states.push_back(Density(thermal));
    for (const auto& st : states) {
      const double sp = uncertain_value(st, q).sigma * uncertain_value(st, p).sigma;
      bound_violation = std::max(bound_violation, std::max(0.0, 0.5 * hbar() - sp));
    }
    r.add("heisenberg.product-bound", "heisenberg-uncertainty", bound_violation, 1e-9);

    // world tubes of a coherent trajectory: constant width, nested in kappa
    const CMatrix h = oscillator_hamiltonian(n, osc);
    const Density rho = coherent_state(Complex(0.9, 0.0), n);
    const Trajectory traj = simulate_trajectory(
        rho, GaugeSplit::schroedinger(h), {{"q", q}}, linspace(0.0, 10.0, 40));
    const WorldTube t1 = world_tube(traj, 0, 1.0);
    const WorldTube t2 = world_tube(traj, 0, 2.0);
    const WorldTube t3 = world_tube(traj, 0, 3.0);
    double nest = 0.0;  // containment violation: tube(k1) must lie inside tube(k2)
    for (std::size_t k = 0; k < t1.times.size(); ++k) {
      const auto row = static_cast<Eigen::Index>(k);
      nest = std::max({nest, t2.lower(row) - t1.lower(row),
                       t1.upper(row) - t2.upper(row),
                       t3.lower(row) - t2.lower(row),
                       t2.upper(row) - t3.upper(row)});
    }
    r.add("worldtube.nesting", "world-tube", std::max(nest, 0.0), 1e-12);
    const double width_ref = std::sqrt(hbar() / (2.0 * osc.mass * osc.omega));
    double width_dev = 0.0, zero_width = 0.0;
    const WorldTube t0 = world_tube(traj, 0, 0.0);
    for (std::size_t k = 0; k < t1.times.size(); ++k) {
      width_dev = std::max(width_dev,
                           std::abs(t1.halfwidth(static_cast<Eigen::Index>(k)) - width_ref));
      zero_width = std::max(zero_width,
                            std::abs(t0.halfwidth(static_cast<Eigen::Index>(k))));
    }
    r.add("worldtube.coherent-constant", "world-tube", width_dev, 1e-6);
    r.add("worldtube.zero-kappa", "world-tube", zero_width, 0.0);
  }
  {
    // free packet spreads monotonically
    RVector first(2);
    first << 0.0, 0.4;
    RMatrix second(2, 2);
    second << 1.0, 0.0, 0.0, 0.66;
    second += first * first.transpose();
    const MomentState m0(first, second);
    const Trajectory traj = moment_trajectory(m0, OscillatorParams{1.0, 0.0},
                                              linspace(0.0, 8.0, 32));
    const WorldTube tube = world_tube(traj, 0, 1.0);
    double shrink = 0.0;
    for (Eigen::Index k = 0; k + 1 < tube.halfwidth.size(); ++k)
      shrink = std::max(shrink, tube.halfwidth(k) - tube.halfwidth(k + 1));
    r.add("worldtube.free-spreading", "world-tube", std::max(shrink, 0.0), 0.0);
  }
  {
    int wrong = 0;
    if (classify_significance({Complex(1.0, 0.0), 0.001}) != Significance::significant) ++wrong;
    if (classify_significance({Complex(0.001, 0.0), 1.0}) != Significance::noise) ++wrong;
    if (classify_significance({Complex(1.0, 0.0), 0.5}) != Significance::indeterminate) ++wrong;
    r.add("significance.classification", "significance-principle",
          static_cast<double>(wrong), 0.0);
  }
  return r;
}

inline VerificationReport verify_prob(std::uint64_t seed) {
  VerificationReport r;
  r.suite = "prob";
  r.seed = seed;
  Rng rng(seed);

  const StochasticModel die = StochasticModel::uniform(6);
  RVector faces(6);
  faces << 1, 2, 3, 4, 5, 6;
  const RandomVariable n_eyes(faces);
  RVector even_v(6);
  even_v << 0, 1, 0, 1, 0, 1;
  const Statement even{RandomVariable(even_v)};

  r.add("die.mean", "sample-mean",
        std::abs(sample_mean({0, 1, 2, 3, 4, 5}, n_eyes) - 3.5), 0.0);
  r.add("die.sample-repeats", "sample-mean",
        std::abs(sample_mean({0, 0, 1}, n_eyes) - 4.0 / 3.0), 0.0);
  r.add("die.expectation", "expectation-axioms",
        std::abs(expectation(die, n_eyes) - 3.5), 0.0);
  r.add("die.even-probability", "statement-probability",
        std::abs(probability(die, even) - 0.5), 0.0);
  {
    double sum = 0.0, pairwise = 0.0;
    std::vector<Statement> alternatives;
    for (double face = 1; face <= 6; ++face)
      alternatives.push_back(is_equal(n_eyes, face));
    for (const auto& s : alternatives) sum += probability(die, s);
    for (std::size_t i = 0; i < alternatives.size(); ++i)
      for (std::size_t j = i + 1; j < alternatives.size(); ++j)
        pairwise = std::max(pairwise, probability(die, conjunction(alternatives[i],
                                                                   alternatives[j])));
    r.add("die.partition-of-unity", "alternative-statements",
          std::max(std::abs(sum - 1.0), pairwise), 1e-12);
  }
  r.add("die.conditional-mean", "conditional-expectation",
        std::abs(conditional_expectation(die, n_eyes, even.variable()) - 4.0), 0.0);
  r.add("die.conditional-probability", "conditional-expectation",
        std::abs(conditional_probability(die, is_equal(n_eyes, 2), even) - 1.0 / 3.0),
        0.0);

  // axioms on random models, including a convex combination
  double e1 = 0, e2 = 0, e3 = 0, e4 = 0, e5 = 0, e6 = 0, e7 = 0;
  for (int it = 0; it < 50; ++it) {
    const std::size_t n = 2 + rng.integer(11);
    StochasticModel model = random_model(rng, n);
    if (it % 5 == 0)
      model = convex_combination({model, random_model(rng, n)}, {0.25, 0.75});
    const RandomVariable a = random_variable(rng, n);
    const RandomVariable b = random_variable(rng, n);
    const double alpha = rng.uniform(-2, 2), beta = rng.uniform(-2, 2);
    e1 = std::max(e1, std::abs(expectation(model, RandomVariable::constant(n, 1.0)) - 1.0));
    e2 = std::max(e2, std::abs(expectation(model, combine(a, b, alpha, beta)) -
                               alpha * expectation(model, a) -
                               beta * expectation(model, b)));
    const RandomVariable nonneg(a.values().cwiseAbs());
    e3 = std::max(e3, std::max(0.0, -expectation(model, nonneg)));
    // vanishing on the support forces <A> = 0 and conversely
    RVector off = RVector::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t w = 0; w < n; ++w)
      if (!model.in_support(w)) off(static_cast<Eigen::Index>(w)) = rng.uniform(0.0, 2.0);
    const RandomVariable null_var(off);
    e4 = std::max(e4, std::abs(expectation(model, null_var)));
    e6 = std::max(e6, std::abs(expectation(model, pointwise_product(null_var, null_var))));
    // eventually constant decreasing sequence A_k = max(A - k, 0) (downarrow 0)
    double prev = expectation(model, nonneg);
    for (int k = 1; k <= 4; ++k) {
      const RVector clipped =
          (nonneg.values().array() - double(k)).max(0.0).matrix();
      const double cur = expectation(model, RandomVariable(clipped));
      e5 = std::max(e5, cur - prev);
      prev = cur;
    }
    e5 = std::max(e5, std::abs(prev));  // terminal value must be exactly 0
    const RandomVariable bigger(
        a.values() + RVector(b.values().cwiseAbs()));
    e7 = std::max(e7, std::max(0.0, expectation(model, a) - expectation(model, bigger)));
  }
  r.add("axioms.e1-normalization", "expectation-axioms", e1, 1e-12);
  r.add("axioms.e2-linearity", "expectation-axioms", e2, 1e-12);
  r.add("axioms.e3-positivity", "expectation-axioms", e3, 1e-12);
  r.add("axioms.e4-definite-on-support", "expectation-axioms", e4, 0.0);
  r.add("axioms.e5-monotone-limits", "expectation-axioms", e5, 1e-12);
  r.add("axioms.e6-square-definite", "expectation-axioms", e6, 0.0);
  r.add("axioms.e7-order", "expectation-axioms", e7, 1e-12);

  {
    double mono = 0, rc = 0, limits = 0;
    for (int it = 0; it < 25; ++it) {
      const std::size_t n = 2 + rng.integer(9);
      const StochasticModel model = random_model(rng, n);
      const RandomVariable a = random_variable(rng, n);
      std::vector<double> xs(a.values().data(), a.values().data() + a.values().size());
      std::sort(xs.begin(), xs.end());
      double prev = 0.0;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const double f = cdf(model, a, xs[k]);
        mono = std::max(mono, prev - f);
        prev = f;
        // right continuity: no mass hides immediately above a jump point
        const double gap = k + 1 < xs.size() ? xs[k + 1] - xs[k] : 1.0;
        if (gap > 0)
          rc = std::max(rc, std::abs(cdf(model, a, xs[k] + 0.49 * gap) - f));
      }
      limits = std::max(limits, std::abs(cdf(model, a, xs.front() - 1.0)));
      limits = std::max(limits, std::abs(cdf(model, a, xs.back()) - 1.0));
      limits = std::max(limits, std::abs(cdf(model, a, xs.back() + 1.0) - 1.0));
    }
    r.add("cdf.monotone", "cdf-laws", mono, 0.0);
    r.add("cdf.right-continuous", "cdf-laws", rc, 0.0);
    r.add("cdf.limits", "cdf-laws", limits, 0.0);
  }

  {
    const StepFunction indicator({3.0, 6.0}, {0.0, 1.0}, 1.0);
    r.add("step.indicator-above-three", "step-function-expectation",
          std::abs(step_expectation(die, n_eyes, indicator) - 0.5), 0.0);
    double vs_composite = 0.0;
    for (int it = 0; it < 30; ++it) {
      const std::size_t n = 2 + rng.integer(9);
      const StochasticModel model = random_model(rng, n);
      const RandomVariable a = random_variable(rng, n);
      // jump points spread to cover the range of A, levels arbitrary
      const double lo = a.values().minCoeff(), hi = a.values().maxCoeff();
      std::vector<double> jumps, levels;
      const int njump = 2 + static_cast<int>(rng.integer(4));
      for (int k = 0; k + 1 < njump; ++k)
        jumps.push_back(rng.uniform(lo - 0.5, hi));
      jumps.push_back(hi);  // last jump at the support maximum
      std::sort(jumps.begin(), jumps.end());
      for (int k = 0; k < njump; ++k) levels.push_back(rng.uniform(-2, 2));
      const StepFunction f(jumps, levels, rng.uniform(-2, 2));
      vs_composite = std::max(vs_composite,
                              std::abs(step_expectation(model, a, f) -
                                       expectation(model, apply(f, a))));
    }
    r.add("step.formula-vs-composite", "step-function-expectation", vs_composite,
          1e-12);
  }

  {
    double product_rule = 0.0;
    for (int it = 0; it < 25; ++it) {
      const std::size_t n = 3 + rng.integer(8);
      const StochasticModel model = StochasticModel::uniform(n);
      RVector av(static_cast<Eigen::Index>(n)), bv(static_cast<Eigen::Index>(n));
      for (Eigen::Index i = 0; i < av.size(); ++i) {
        av(i) = rng.uniform() < 0.5 ? 1.0 : 0.0;
        bv(i) = rng.uniform() < 0.5 ? 1.0 : 0.0;
      }
      av(0) = 1.0;  // keep Pr(A) > 0
      const Statement a{RandomVariable(av)}, b{RandomVariable(bv)};
      const double pab = probability(model, conjunction(a, b));
      const double via_conditioning =
          probability(condition(model, a.variable()), b) * probability(model, a);
      product_rule = std::max(product_rule, std::abs(pab - via_conditioning));
    }
    r.add("conditional.product-rule", "conditional-product-rule", product_rule,
          1e-12);
    r.add("conditional.unit-weight", "conditional-expectation",
          std::abs(conditional_expectation(die, n_eyes,
                                           RandomVariable::constant(6, 1.0)) -
                   expectation(die, n_eyes)),
          0.0);
    const StochasticModel once = condition(die, even.variable());
    const StochasticModel twice = condition(once, even.variable());
    r.add("conditional.idempotent", "conditional-expectation",
          std::abs(expectation(once, n_eyes) - expectation(twice, n_eyes)), 1e-12);
  }

  {
    const BayesResult area = bayes_update(die, is_equal(n_eyes, 2), even);
    r.add("bayes.die-posterior", "bayes-update",
          std::abs(area.posterior - 1.0 / 3.0), 1e-15);
    // independent pair on the die: parity and "at most 2"
    RVector low_v(6);
    low_v << 1, 1, 0, 0, 0, 0;
    const Statement low{RandomVariable(low_v)};
    RVector odd_v(6);
    odd_v << 1, 0, 1, 0, 1, 0;
    const Statement odd{RandomVariable(odd_v)};
    const BayesResult indep = bayes_update(die, odd, low);
    r.add("bayes.independent-ratio", "bayes-update",
          std::abs(indep.update_ratio - 1.0), 1e-12);
    const BayesResult same = bayes_update(die, even, even);
    r.add("bayes.self-posterior", "bayes-update", std::abs(same.posterior - 1.0),
          1e-12);
  }

  {
    const std::vector<double> data{1.0, 2.0, 3.0};
    double res = std::abs(sample_cdf(data, 2.0) - 2.0 / 3.0);
    res = std::max(res, std::abs(sample_cdf(data, 0.5)));
    res = std::max(res, std::abs(sample_cdf(data, 3.0) - 1.0));
    res = std::max(res, std::abs(sample_cdf(data, 9.0) - 1.0));
    r.add("samplecdf.counts", "sample-cdf", res, 0.0);
    const std::vector<double> die_data{1, 2, 3, 4, 5, 6};
    r.add("density.die-window", "density-estimate",
          std::abs(density_estimate(die_data, 3.25, 1.0) - 1.0 / 6.0), 1e-12);
  }
  return r;
}

inline VerificationReport verify_lln(std::uint64_t seed) {
  VerificationReport r;
  r.suite = "lln";
  r.seed = seed;
  Rng rng(seed);

  double ptrace = 0, identical = 0, independent = 0;
  double mean_res = 0, sigma_res = 0, second_res = 0, single_copy = 0;
  for (int sub_dim : {2, 3}) {
    const Density sub(random_density_matrix(rng, sub_dim));
    const CMatrix a = random_hermitian(rng, sub_dim);
    const CMatrix b = random_hermitian(rng, sub_dim);
    for (int n : {1, 2, 4, 6}) {
      const ProductEnsemble ens(sub, n);
      for (int site = 0; site < n; ++site)
        ptrace = std::max(ptrace,
                          deviation(partial_trace_site(ens.joint().matrix(), site,
                                                       sub_dim, n),
                                    sub.matrix()));
      identical = std::max(identical, identical_residual(ens, a));
      if (n <= 4)  // pairwise products get large; dims <= 81 are plenty
        independent = std::max(independent, independence_residual(ens, a, b));
      const LlnCheck check = lln_check(ens, a);
      mean_res = std::max(mean_res, check.mean_residual);
      sigma_res = std::max(sigma_res, check.sigma_residual);
      second_res = std::max(second_res, check.second_moment_residual);
      if (n == 1) single_copy = std::max(single_copy, check.sigma_residual);
    }
  }
  r.add("ensemble.partial-trace", "identical-preparation", ptrace, 1e-12);
  r.add("ensemble.identical", "identical-preparation", identical, 1e-12);
  r.add("ensemble.independent", "independence", independent, 1e-12);
  r.add("lln.mean", "lln-sqrt-n", mean_res, 1e-12);
  r.add("lln.sigma", "lln-sqrt-n", sigma_res, 1e-12);
  r.add("lln.second-moment", "lln-second-moment", second_res, 1e-12);
  r.add("lln.single-copy", "lln-sqrt-n", single_copy, 0.0);
  {
    // frozen example: diag(3/4, 1/4), A = sigma_z, N = 4
    CMatrix sub = CMatrix::Zero(2, 2);
    sub(0, 0) = 0.75;
    sub(1, 1) = 0.25;
    const ProductEnsemble ens(Density(sub), 4);
    const LlnCheck check = lln_check(ens, pauli_z());
    const double res = std::max(
        std::abs(check.mean_quantity.value - Complex(0.5)),
        std::abs(check.mean_quantity.sigma - std::sqrt(0.75) / 2.0));
    r.add("lln.frozen-example", "lln-sqrt-n", res, 1e-12);
  }

  {
    double herm = 0, idem = 0, sigma_p = 0, range = 0;
    for (int it = 0; it < 20; ++it) {
      const Eigen::Index dim = 3 + static_cast<Eigen::Index>(rng.integer(3));
      const CMatrix p = random_projector(rng, dim, 1 + static_cast<Eigen::Index>(rng.integer(dim - 1)));
      herm = std::max(herm, hermiticity_defect(p));
      idem = std::max(idem, deviation(CMatrix(p * p), p));
      const Density rho(random_density_matrix(rng, dim));
      const QuantumStatement stmt(p);
      const double prob = q_probability(rho, stmt);
      range = std::max(range, std::max(0.0, std::max(-prob, prob - 1.0)));
      const double sigma = uncertain_value(rho, p).sigma;
      sigma_p = std::max(sigma_p, std::abs(sigma - std::sqrt(prob * (1.0 - prob))));
    }
    r.add("statement.hermitian", "quantum-statement", herm, 1e-12);
    r.add("statement.idempotent", "quantum-statement", idem, 1e-10);
    r.add("statement.sigma-p", "quantum-statement", sigma_p, 1e-10);
    r.add("qprob.range", "q-probability", range, 0.0);
    const Density mixed = Density::maximally_mixed(3);
    r.add("qprob.identity", "q-probability",
          std::abs(q_probability(mixed, CMatrix(identity(3))) - 1.0), 1e-12);
  }

  {
    const Density mixed = Density::maximally_mixed(2);
    const QuantumStatement up = spectral_event(pauli_z(), 0.0, 2.0);
    CMatrix expected = CMatrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    double res = deviation(up.matrix(), expected);
    res = std::max(res, std::abs(q_probability(mixed, up) - 0.5));
    const QuantumStatement all = spectral_event(pauli_z(), -2.0, 2.0);
    res = std::max(res, deviation(all.matrix(), identity(2)));
    const QuantumStatement none = spectral_event(pauli_z(), 5.0, 6.0);
    res = std::max(res, max_abs(none.matrix()));
    res = std::max(res, q_probability(mixed, none));
    r.add("spectral.event-probability", "spectral-event", res, 1e-12);

    double partition = 0.0;
    for (int it = 0; it < 10; ++it) {
      const CMatrix a = random_hermitian(rng, 5);
      Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
      const RVector ev = es.eigenvalues();
      // interval breaks at midpoints between distinct eigenvalues
      std::vector<double> breaks{ev.minCoeff() - 1.0};
      for (Eigen::Index k = 0; k + 1 < ev.size(); ++k)
        if (ev(k + 1) - ev(k) > 1e-6) breaks.push_back(0.5 * (ev(k) + ev(k + 1)));
      breaks.push_back(ev.maxCoeff() + 1.0);
      CMatrix sum = CMatrix::Zero(5, 5);
      std::vector<QuantumStatement> events;
      for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        events.push_back(spectral_event(a, breaks[k], breaks[k + 1]));
        sum += events.back().matrix();
      }
      partition = std::max(partition, deviation(sum, identity(5)));
      for (std::size_t i = 0; i < events.size(); ++i)
        for (std::size_t j = i + 1; j < events.size(); ++j)
          partition = std::max(partition,
                               max_abs(CMatrix(events[i].matrix() * events[j].matrix())));
    }
    r.add("spectral.partition", "spectral-event", partition, 1e-10);
  }

  {
    double res = 0.0;
    const CVector e1 = (CVector(2) << 1, 0).finished();
    const CVector e2 = (CVector(2) << 0, 1).finished();
    res = std::max(res, std::abs(test_for_state(e1, e1) - 1.0));
    res = std::max(res, test_for_state(e1, e2));
    const CVector diag = (CVector(2) << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)).finished();
    res = std::max(res, std::abs(test_for_state(e1, diag) - 0.5));
    for (int it = 0; it < 20; ++it) {
      const CVector phi = random_unit_vector(rng, 4);
      const CVector psi = random_unit_vector(rng, 4);
      res = std::max(res, std::abs(test_for_state(phi, psi) - test_for_state(psi, phi)));
      const double via_state = q_probability(Density::pure(psi),
                                             CMatrix(phi * phi.adjoint()));
      res = std::max(res, std::abs(test_for_state(phi, psi) - via_state));
    }
    r.add("amplitude.squared", "state-test-amplitude", res, 1e-12);
  }

  {
    // relative frequencies at N = 10^4 against the 4-sigma safeguard
    const std::uint64_t n_draws = 10000;
    const auto experiments = detail::canonical_frequency_experiments();
    CMatrix proj = CMatrix::Zero(2, 2);
    proj(0, 0) = 1.0;
    const QuantumStatement p0{proj};
    double bound_excess = 0.0, safeguard = 0.0, determinism = 0.0, extremes = 0.0,
           bound_formula = 0.0;
    int idx = 0;
    for (const auto& [state, stmt] : experiments) {
      const FrequencyExperiment ex =
          relative_frequency(state, stmt, n_draws, seed + static_cast<std::uint64_t>(idx));
      const double bound = 4.0 * std::sqrt(ex.p_theory * (1.0 - ex.p_theory) /
                                           static_cast<double>(n_draws));
      bound_excess = std::max(bound_excess,
                              std::abs(ex.p_hat - ex.p_theory) - bound);
      if (!within_k_sigma(ex, 4.0)) safeguard += 1.0;
      bound_formula = std::max(
          bound_formula, std::abs(ex.sigma_bound -
                                  std::sqrt(ex.p_hat * (1.0 - ex.p_hat) /
                                            static_cast<double>(n_draws))));
      const FrequencyExperiment again =
          relative_frequency(state, stmt, n_draws, seed + static_cast<std::uint64_t>(idx));
      if (frequency_to_json(ex).dump() != frequency_to_json(again).dump())
        determinism += 1.0;
      ++idx;
    }
    const Density up = Density::pure((CVector(2) << 1, 0).finished());
    const FrequencyExperiment sure = relative_frequency(up, p0, 500, seed);
    extremes = std::max(extremes, std::abs(sure.p_hat - 1.0));
    const FrequencyExperiment never =
        relative_frequency(up, QuantumStatement(CMatrix::Zero(2, 2)), 500, seed);
    extremes = std::max(extremes, std::abs(never.p_hat));
    r.add("frequency.bounds", "relative-frequency", std::max(0.0, bound_excess), 0.0);
    r.add("frequency.extremes", "relative-frequency", extremes, 0.0);
    r.add("frequency.determinism", "relative-frequency", determinism, 0.0);
    r.add("frequency.sigma-formula", "relative-frequency", bound_formula, 0.0);
    r.add("frequency.four-sigma-safeguard", "sigma-safeguard", safeguard, 0.0);
  }
  return r;
}

// the canonical frequency experiments as a JSON artifact (one record per
// experiment, same seeds the lln suite uses)
inline Json frequency_experiments_json(std::uint64_t seed,
                                       std::uint64_t draws = 10000) {
  Json out = Json::array();
  std::uint64_t idx = 0;
  for (const auto& [state, stmt] : detail::canonical_frequency_experiments())
    out.push_back(frequency_to_json(
        relative_frequency(state, stmt, draws, seed + idx++)));
  return out;
}

inline std::vector<std::string> verify_suite_names() {
  return {"lie", "pictures", "uncertainty", "prob", "lln", "all"};
}

inline VerificationReport run_verify(const std::string& suite,
                                     std::uint64_t seed) {
  if (suite == "lie") return verify_lie(seed);
  if (suite == "pictures") return verify_pictures(seed);
  if (suite == "uncertainty") return verify_uncertainty(seed);
  if (suite == "prob") return verify_prob(seed);
  if (suite == "lln") return verify_lln(seed);
  if (suite == "all") {
    VerificationReport all;
    all.suite = "all";
    all.seed = seed;
    for (const auto& name : {"lie", "pictures", "uncertainty", "prob", "lln"}) {
      const VerificationReport part = run_verify(name, seed);
      for (const auto& c : part.checks) {
        Check prefixed = c;
        prefixed.id = std::string(name) + "." + c.id;
        all.checks.push_back(std::move(prefixed));
      }
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + suite +
                              "' (expected lie|pictures|uncertainty|prob|lln|all)");
}

}  // namespace exlab
