#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "exlab/common.hpp"

// Seeded deterministic random streams. The uniform recipe is fixed
// ((x >> 11) * 2^-53 on mt19937_64 output) rather than delegated to
// std distributions, so identical seeds give identical streams on every
// platform; all stochastic checks in the suites rely on that.

namespace exlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform in [0, 1), 53 significant bits
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n), rejection sampled
  std::uint64_t integer(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::integer: n must be > 0");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  // standard normal via Box-Muller (pairs cached)
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = uniform(-1.0, 1.0);
      v = uniform(-1.0, 1.0);
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  Complex complex_in_disc(double radius = 1.0) {
    return {uniform(-radius, radius), uniform(-radius, radius)};
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

inline CMatrix random_matrix(Rng& rng, Eigen::Index n, double scale = 0.5) {
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rng.complex_in_disc(scale);
  return m;
}

inline CMatrix random_hermitian(Rng& rng, Eigen::Index n, double scale = 0.5) {
  return hermitize(random_matrix(rng, n, scale));
}

// G G^+ / Tr(G G^+): Hermitian, PSD, unit trace by construction
inline CMatrix random_density_matrix(Rng& rng, Eigen::Index n) {
  const CMatrix g = random_matrix(rng, n, 1.0);
  CMatrix rho = g * g.adjoint();
  rho /= trace(rho).real();
  return hermitize(rho);
}

inline CVector random_unit_vector(Rng& rng, Eigen::Index n) {
  CVector v(n);
  double norm2 = 0.0;
  do {
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_in_disc(1.0);
    norm2 = v.squaredNorm();
  } while (norm2 < 1e-6);
  return v / std::sqrt(norm2);
}

// rank-r orthogonal projector from the eigenbasis of a random Hermitian
inline CMatrix random_projector(Rng& rng, Eigen::Index n, Eigen::Index rank) {
  require(rank >= 0 && rank <= n, "random_projector: invalid rank");
  const CMatrix h = random_hermitian(rng, n);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const CMatrix v = es.eigenvectors().leftCols(rank);
  return v * v.adjoint();
}

}  // namespace exlab
