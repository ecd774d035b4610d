#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "exlab/common.hpp"
#include "exlab/random.hpp"

// Expectation-first classical probability on finite sample spaces.
// A stochastic model is a nonnegative weight vector; expectations are
// weighted means and satisfy
//   (E1) <1> = 1
//   (E2) linearity
//   (E3) A >= 0 implies <A> >= 0
//   (E4) A >= 0, <A> = 0 implies A = 0 on the support
//   (E5) monotone limits (on a finite space: eventually constant sequences)
// with (E6), (E7) as consequences. Probabilities are expectations of
// {0,1}-valued variables. Weights are stored raw and divided by their
// total at evaluation time, so integer-weight models evaluate exactly.

namespace exlab {

struct SampleSpace {
  std::size_t size = 0;
  std::vector<std::string> labels;  // optional, empty or one per point

  explicit SampleSpace(std::size_t n, std::vector<std::string> names = {})
      : size(n), labels(std::move(names)) {
    require(size >= 1, "SampleSpace: size must be >= 1");
    require(labels.empty() || labels.size() == size,
            "SampleSpace: need one label per point (or none)");
  }
};

class RandomVariable {
 public:
  explicit RandomVariable(RVector values) : values_(std::move(values)) {
    require(values_.size() >= 1, "RandomVariable: empty value vector");
    require(values_.allFinite(), "RandomVariable: values must be finite");
  }

  static RandomVariable constant(std::size_t n, double c) {
    return RandomVariable(RVector::Constant(static_cast<Eigen::Index>(n), c));
  }

  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }
  double operator()(std::size_t point) const {
    require(point < size(), "RandomVariable: point out of range");
    return values_(static_cast<Eigen::Index>(point));
  }
  const RVector& values() const { return values_; }

 private:
  RVector values_;
};

inline RandomVariable combine(const RandomVariable& a, const RandomVariable& b,
                              double alpha, double beta) {
  require(a.size() == b.size(), "combine: sample-space mismatch");
  return RandomVariable(alpha * a.values() + beta * b.values());
}

inline RandomVariable pointwise_product(const RandomVariable& a,
                                        const RandomVariable& b) {
  require(a.size() == b.size(), "pointwise_product: sample-space mismatch");
  return RandomVariable(a.values().cwiseProduct(b.values()));
}

// {0,1}-valued random variable
class Statement {
 public:
  explicit Statement(RandomVariable v) : var_(std::move(v)) {
    for (std::size_t w = 0; w < var_.size(); ++w)
      require(var_(w) == 0.0 || var_(w) == 1.0,
              "Statement: values must be exactly 0 or 1");
  }

  static Statement always_true(std::size_t n) {
    return Statement(RandomVariable::constant(n, 1.0));
  }

  const RandomVariable& variable() const { return var_; }
  std::size_t size() const { return var_.size(); }
  bool truth(std::size_t point) const { return var_(point) == 1.0; }

 private:
  RandomVariable var_;
};

inline Statement conjunction(const Statement& a, const Statement& b) {
  return Statement(pointwise_product(a.variable(), b.variable()));
}

inline Statement negation(const Statement& a) {
  return Statement(RandomVariable(RVector::Ones(a.variable().values().size()) -
                                  a.variable().values()));
}

class StochasticModel {
 public:
  explicit StochasticModel(RVector weights) : raw_(std::move(weights)) {
    require(raw_.size() >= 1, "StochasticModel: empty weight vector");
    require(raw_.allFinite(), "StochasticModel: weights must be finite");
    require(raw_.minCoeff() >= 0.0, "StochasticModel: weights must be nonnegative");
    long double total = 0.0L;
    for (Eigen::Index i = 0; i < raw_.size(); ++i) total += raw_(i);
    total_ = static_cast<double>(total);
    require(total_ > 0.0, "StochasticModel: weights must not all vanish");
  }

  static StochasticModel uniform(std::size_t n) {
    return StochasticModel(RVector::Ones(static_cast<Eigen::Index>(n)));
  }

  std::size_t size() const { return static_cast<std::size_t>(raw_.size()); }
  const RVector& raw_weights() const { return raw_; }
  double total() const { return total_; }
  RVector weights() const { return raw_ / total_; }
  bool in_support(std::size_t point) const {
    return raw_(static_cast<Eigen::Index>(point)) > 0.0;
  }

 private:
  RVector raw_;
  double total_ = 0.0;
};

// (1/|S|) sum over the multiset S of realizations
inline double sample_mean(const std::vector<std::size_t>& sample,
                          const RandomVariable& a) {
  require(!sample.empty(), "sample_mean: sample must be nonempty");
  long double acc = 0.0L;
  for (std::size_t w : sample) {
    require(w < a.size(), "sample_mean: experiment index out of range");
    acc += a(w);
  }
  return static_cast<double>(acc) / static_cast<double>(sample.size());
}

inline double expectation(const StochasticModel& model,
                          const RandomVariable& a) {
  require(model.size() == a.size(), "expectation: sample-space mismatch");
  long double acc = 0.0L;
  for (std::size_t w = 0; w < model.size(); ++w)
    acc += static_cast<long double>(model.raw_weights()(static_cast<Eigen::Index>(w))) * a(w);
  return static_cast<double>(acc) / model.total();
}

inline double probability(const StochasticModel& model, const Statement& p) {
  return expectation(model, p.variable());
}

// the statement [A <= x]
inline Statement is_at_most(const RandomVariable& a, double x) {
  RVector v(a.values().size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = a.values()(i) <= x ? 1.0 : 0.0;
  return Statement(RandomVariable(v));
}

inline Statement is_equal(const RandomVariable& a, double x) {
  RVector v(a.values().size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = a.values()(i) == x ? 1.0 : 0.0;
  return Statement(RandomVariable(v));
}

// CDF(x) = Pr(A <= x); right-continuous step function with limits 0 and 1
inline double cdf(const StochasticModel& model, const RandomVariable& a,
                  double x) {
  return probability(model, is_at_most(a, x));
}

// Left-continuous step function: levels[k] is the value on
// (jumps[k-1], jumps[k]] (levels[0] on (-inf, jumps[0]]), tail_value on
// (jumps.back(), +inf). The jump-sum expectation formula only sees the
// levels at the jumps, so it represents <f(A)> whenever the support of A
// lies at or below the last jump.
struct StepFunction {
  std::vector<double> jumps;
  std::vector<double> levels;
  double tail_value = 0.0;

  StepFunction(std::vector<double> jumps_in, std::vector<double> levels_in,
               double tail = 0.0)
      : jumps(std::move(jumps_in)), levels(std::move(levels_in)), tail_value(tail) {
    require(!jumps.empty() && jumps.size() == levels.size(),
            "StepFunction: need matching nonempty jumps and levels");
    require(std::is_sorted(jumps.begin(), jumps.end()),
            "StepFunction: jump points must be nondecreasing");
  }

  double operator()(double x) const {
    for (std::size_t k = 0; k < jumps.size(); ++k)
      if (x <= jumps[k]) return levels[k];
    return tail_value;
  }
};

inline RandomVariable apply(const StepFunction& f, const RandomVariable& a) {
  RVector v(a.values().size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = f(a.values()(i));
  return RandomVariable(v);
}

// <f(A)> from the CDF alone:
// f(x_1) F(x_1) + sum_k f(x_{k+1}) (F(x_{k+1}) - F(x_k))
inline double step_expectation(const StochasticModel& model,
                               const RandomVariable& a,
                               const StepFunction& f) {
  require(model.size() == a.size(), "step_expectation: sample-space mismatch");
  double value = f.levels[0] * cdf(model, a, f.jumps[0]);
  for (std::size_t k = 0; k + 1 < f.jumps.size(); ++k)
    value += f.levels[k + 1] *
             (cdf(model, a, f.jumps[k + 1]) - cdf(model, a, f.jumps[k]));
  return value;
}

// <X P>/<P> for a nonnegative weight variable P with <P> > 0
inline double conditional_expectation(const StochasticModel& model,
                                      const RandomVariable& x,
                                      const RandomVariable& weight) {
  require(model.size() == x.size() && model.size() == weight.size(),
          "conditional_expectation: sample-space mismatch");
  require(weight.values().minCoeff() >= 0.0,
          "conditional_expectation: weight must be nonnegative");
  const double denom = expectation(model, weight);
  if (!(denom > 0.0))
    throw std::domain_error(
        "conditional_expectation: conditioning on a null event (<P> = 0)");
  return expectation(model, pointwise_product(x, weight)) / denom;
}

// restriction-and-renormalization: reweight by P
inline StochasticModel condition(const StochasticModel& model,
                                 const RandomVariable& weight) {
  require(model.size() == weight.size(), "condition: sample-space mismatch");
  require(weight.values().minCoeff() >= 0.0,
          "condition: weight must be nonnegative");
  RVector raw = model.raw_weights().cwiseProduct(weight.values());
  if (!(raw.sum() > 0.0))
    throw std::domain_error("condition: conditioning on a null event");
  return StochasticModel(raw);
}

inline double conditional_probability(const StochasticModel& model,
                                      const Statement& b, const Statement& a) {
  return conditional_expectation(model, b.variable(), a.variable());
}

struct BayesResult {
  double prior = 0.0;
  double posterior = 0.0;
  double update_ratio = 0.0;
};

// posterior(A|B) = prior(A) * Pr(B|A)/Pr(B). The product rule
// Pr(B and A) = Pr(B|A) Pr(A) is re-derived through the conditioned model
// as an internal consistency check.
inline BayesResult bayes_update(const StochasticModel& model,
                                const Statement& a, const Statement& b) {
  const double pa = probability(model, a);
  const double pb = probability(model, b);
  if (!(pb > 0.0)) throw std::domain_error("bayes_update: Pr(B) must be positive");
  if (!(pa > 0.0)) throw std::domain_error("bayes_update: Pr(A) must be positive");
  const double pab = probability(model, conjunction(a, b));
  const double pb_given_a = pab / pa;
  const double via_conditioned = probability(condition(model, a.variable()), b) * pa;
  if (std::abs(pab - via_conditioned) > 1e-12)
    throw std::logic_error("bayes_update: conditional product rule violated");
  BayesResult r;
  r.prior = pa;
  r.update_ratio = pb_given_a / pb;
  r.posterior = pa * r.update_ratio;
  return r;
}

// fraction of data points <= x; ties resolve by <= (right continuity)
inline double sample_cdf(const std::vector<double>& data, double x) {
  require(!data.empty(), "sample_cdf: data must be nonempty");
  std::size_t count = 0;
  for (double v : data)
    if (v <= x) ++count;
  return static_cast<double>(count) / static_cast<double>(data.size());
}

// derivative of the piecewise-linear smoothing of the sample CDF over a
// fixed window; an estimator, not an identity
inline double density_estimate(const std::vector<double>& data, double x,
                               double window) {
  require(window > 0.0, "density_estimate: window must be positive");
  return (sample_cdf(data, x + 0.5 * window) -
          sample_cdf(data, x - 0.5 * window)) /
         window;
}

inline StochasticModel convex_combination(
    const std::vector<StochasticModel>& models,
    const std::vector<double>& coeffs) {
  require(!models.empty() && models.size() == coeffs.size(),
          "convex_combination: need one coefficient per model");
  double total = 0.0;
  for (double c : coeffs) {
    require(c >= 0.0, "convex_combination: coefficients must be nonnegative");
    total += c;
  }
  require(std::abs(total - 1.0) <= 1e-12,
          "convex_combination: coefficients must sum to 1");
  RVector raw = RVector::Zero(static_cast<Eigen::Index>(models[0].size()));
  for (std::size_t k = 0; k < models.size(); ++k) {
    require(models[k].size() == models[0].size(),
            "convex_combination: sample-space mismatch");
    raw += coeffs[k] * models[k].weights();
  }
  return StochasticModel(raw);
}

inline StochasticModel random_model(Rng& rng, std::size_t n) {
  RVector raw(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < raw.size(); ++i)
    raw(i) = rng.uniform() < 0.2 ? 0.0 : rng.uniform();  // some support gaps
  if (raw.maxCoeff() <= 0.0) raw(0) = 1.0;
  return StochasticModel(raw);
}

inline RandomVariable random_variable(Rng& rng, std::size_t n,
                                      double lo = -2.0, double hi = 2.0) {
  RVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.uniform(lo, hi);
  return RandomVariable(v);
}

}  // namespace exlab
