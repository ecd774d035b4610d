#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "exlab/common.hpp"

// Exact-coefficient polynomials in the phase-space variables
// (q_1..q_d, p_1..p_d). Coefficients are GMP rationals, so the Poisson
// algebra identities hold exactly, not merely to tolerance. Variable
// index convention: v in [0, d) is q_{v+1}, v in [d, 2d) is p_{v-d+1}.

namespace exlab {

using Exponents = std::vector<unsigned>;

class PhasePolynomial {
 public:
  explicit PhasePolynomial(int dof) : dof_(dof) {
    require(dof >= 1, "PhasePolynomial: dof must be >= 1");
  }

  static PhasePolynomial constant(int dof, const mpq_class& c) {
    PhasePolynomial poly(dof);
    poly.add_term(Exponents(2 * dof, 0), c);
    return poly;
  }

  // q_i, zero-based component index
  static PhasePolynomial position(int dof, int i = 0) {
    return variable(dof, i, /*momentum=*/false);
  }

  // p_i, zero-based component index
  static PhasePolynomial momentum(int dof, int i = 0) {
    return variable(dof, i, /*momentum=*/true);
  }

  int dof() const { return dof_; }
  int var_count() const { return 2 * dof_; }
  const std::map<Exponents, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // canonical form: zero coefficients are never stored, coefficients are
  // reduced (mpq_class(2, 4) arrives unreduced)
  void add_term(const Exponents& exponents, const mpq_class& coeff) {
    require(static_cast<int>(exponents.size()) == var_count(),
            "PhasePolynomial: exponent vector has wrong length");
    require(coeff.get_den() != 0, "PhasePolynomial: zero denominator");
    mpq_class reduced = coeff;
    reduced.canonicalize();
    if (reduced == 0) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
      terms_.emplace(exponents, std::move(reduced));
    } else {
      it->second += reduced;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (unsigned k : e) d += static_cast<int>(k);
      deg = std::max(deg, d);
    }
    return deg;
  }

  PhasePolynomial operator-() const {
    PhasePolynomial out(dof_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  PhasePolynomial& operator+=(const PhasePolynomial& rhs) {
    require(dof_ == rhs.dof_, "PhasePolynomial: dof mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  PhasePolynomial& operator-=(const PhasePolynomial& rhs) {
    require(dof_ == rhs.dof_, "PhasePolynomial: dof mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  friend PhasePolynomial operator+(PhasePolynomial a,
                                   const PhasePolynomial& b) {
    a += b;
    return a;
  }

  friend PhasePolynomial operator-(PhasePolynomial a,
                                   const PhasePolynomial& b) {
    a -= b;
    return a;
  }

  friend PhasePolynomial operator*(const PhasePolynomial& a,
                                   const PhasePolynomial& b) {
    require(a.dof_ == b.dof_, "PhasePolynomial: dof mismatch");
    PhasePolynomial out(a.dof_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend PhasePolynomial operator*(const mpq_class& c, PhasePolynomial a) {
    PhasePolynomial out(a.dof_);
    if (c == 0) return out;
    for (auto& [e, coeff] : a.terms_) out.terms_.emplace(e, c * coeff);
    return out;
  }

  // partial derivative with respect to variable index v in [0, 2d)
  PhasePolynomial derivative(int v) const {
    require(v >= 0 && v < var_count(), "PhasePolynomial: bad variable index");
    PhasePolynomial out(dof_);
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exponents lowered = e;
      lowered[v] -= 1;
      out.add_term(lowered, c * static_cast<long>(e[v]));
    }
    return out;
  }

  PhasePolynomial dq(int i) const { return derivative(i); }
  PhasePolynomial dp(int i) const { return derivative(dof_ + i); }

  double eval(const RVector& x) const {
    require(x.size() == var_count(), "PhasePolynomial::eval: wrong point size");
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
      double term = c.get_d();
      for (int v = 0; v < var_count(); ++v)
        for (unsigned k = 0; k < e[v]; ++k) term *= x(v);
      acc += term;
    }
    return acc;
  }

  mpq_class eval_exact(const std::vector<mpq_class>& x) const {
    require(static_cast<int>(x.size()) == var_count(),
            "PhasePolynomial::eval_exact: wrong point size");
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
      mpq_class term = c;
      for (int v = 0; v < var_count(); ++v)
        for (unsigned k = 0; k < e[v]; ++k) term *= x[v];
      acc += term;
    }
    return acc;
  }

  // largest |coefficient| as a double; 0 for the zero polynomial
  double max_coeff_abs() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_)
      m = std::max(m, std::abs(c.get_d()));
    return m;
  }

  bool operator==(const PhasePolynomial& rhs) const {
    return dof_ == rhs.dof_ && terms_ == rhs.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c.get_str();
      for (int v = 0; v < var_count(); ++v) {
        if (e[v] == 0) continue;
        os << (v < dof_ ? "*q" : "*p") << (v < dof_ ? v + 1 : v - dof_ + 1);
        if (e[v] > 1) os << "^" << e[v];
      }
    }
    return os.str();
  }

 private:
  static PhasePolynomial variable(int dof, int i, bool momentum) {
    PhasePolynomial poly(dof);
    require(i >= 0 && i < dof, "PhasePolynomial: component out of range");
    Exponents e(2 * dof, 0);
    e[momentum ? dof + i : i] = 1;
    poly.add_term(e, 1);
    return poly;
  }

  int dof_;
  std::map<Exponents, mpq_class> terms_;
};

// Sum_i p_i dA/dq_i - q_i dA/dp_i. Appears in the product rule when a
// Lie product acts on the Gaussian weight below.
inline PhasePolynomial radial_rotation_term(const PhasePolynomial& a) {
  PhasePolynomial out(a.dof());
  for (int i = 0; i < a.dof(); ++i) {
    out += PhasePolynomial::momentum(a.dof(), i) * a.dq(i);
    out -= PhasePolynomial::position(a.dof(), i) * a.dp(i);
  }
  return out;
}

// poly(q,p) * exp(-(|q|^2+|p|^2)/2). The bare Liouville integral of a
// polynomial diverges; on this class every integral is finite and is
// evaluated in closed form through standard-normal moments.
struct GaussianEnvelope {
  PhasePolynomial poly;

  explicit GaussianEnvelope(PhasePolynomial p) : poly(std::move(p)) {}
  int dof() const { return poly.dof(); }
};

inline GaussianEnvelope operator*(const GaussianEnvelope& g,
                                  const PhasePolynomial& c) {
  return GaussianEnvelope(g.poly * c);
}

inline GaussianEnvelope operator*(const PhasePolynomial& c,
                                  const GaussianEnvelope& g) {
  return GaussianEnvelope(g.poly * c);
}

// E[x^k] for x ~ N(0,1): (k-1)!! for even k, 0 for odd k
inline mpz_class normal_moment_1d(unsigned k) {
  if (k % 2 == 1) return 0;
  mpz_class m = 1;
  for (unsigned j = k; j > 1; j -= 2) m *= (j - 1);
  return m;
}

// E[poly(x)] for x ~ N(0, I_{2d}), exact
inline mpq_class gaussian_moment(const PhasePolynomial& poly) {
  mpq_class acc = 0;
  for (const auto& [e, c] : poly.terms()) {
    mpz_class factor = 1;
    bool odd = false;
    for (unsigned k : e) {
      if (k % 2 == 1) {
        odd = true;
        break;
      }
      factor *= normal_moment_1d(k);
    }
    if (!odd) acc += c * mpq_class(factor);
  }
  return acc;
}

// Liouville integral of the enveloped quantity as an exact multiple of
// (2*pi)^d: int poly * exp(-r^2/2) = (2*pi)^d * gaussian_moment(poly)
inline mpq_class integral_classical_scaled(const GaussianEnvelope& g) {
  return gaussian_moment(g.poly);
}

inline double integral_classical(const GaussianEnvelope& g) {
  const double two_pi = 2.0 * 3.14159265358979323846;
  return integral_classical_scaled(g).get_d() * std::pow(two_pi, g.dof());
}

}  // namespace exlab
