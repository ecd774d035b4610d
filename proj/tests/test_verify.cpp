#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "exlab/verify.hpp"

using namespace exlab;

TEST_CASE("every suite passes at its tolerances") {
  for (const std::string suite : {"lie", "pictures", "uncertainty", "prob", "lln"}) {
    const VerificationReport report = run_verify(suite, 12345);
    INFO(report_to_text(report));
    CHECK(report.all_pass());
    CHECK(report.suite == suite);
    for (const auto& check : report.checks)
      CHECK(check.pass == (check.residual <= check.tolerance));
  }
}

TEST_CASE("law coverage spans every verified identity") {
  // one stable identifier per law; the combined suite must cover all of them
  const std::set<std::string> required = {
      "classical-lie-product", "quantum-lie-bracket", "lie-anticommutativity",
      "lie-product-rule", "lie-jacobi", "liouville-integral", "trace-integral",
      "canonical-invariance", "integration-by-parts", "state-expectation",
      "quantity-evolution", "state-evolution", "schroedinger-picture",
      "heisenberg-picture", "interaction-picture", "von-neumann-equation",
      "heisenberg-time-shift", "expectation-lie-bracket", "expectation-dynamics",
      "ehrenfest-equation", "ehrenfest-position-momentum",
      "uncertainty-definition", "uncertainty-nonhermitian",
      "robertson-inequality", "heisenberg-uncertainty", "world-tube",
      "significance-principle", "sample-mean", "expectation-axioms",
      "statement-probability", "alternative-statements", "cdf-laws",
      "step-function-expectation", "conditional-expectation",
      "conditional-product-rule", "bayes-update", "sample-cdf",
      "density-estimate", "identical-preparation", "independence", "lln-sqrt-n",
      "lln-second-moment", "quantum-statement", "q-probability",
      "spectral-event", "state-test-amplitude", "relative-frequency",
      "sigma-safeguard"};
  const VerificationReport all = run_verify("all", 12345);
  std::set<std::string> seen;
  for (const auto& check : all.checks) seen.insert(check.law);
  for (const auto& law : required) {
    INFO("missing law: " << law);
    CHECK(seen.count(law) == 1);
  }
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  const VerificationReport a = run_verify("all", 777);
  const VerificationReport b = run_verify("all", 777);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  CHECK(report_to_text(a) == report_to_text(b));
  CHECK(a.all_pass());
}

TEST_CASE("different seeds still pass") {
  for (std::uint64_t seed : {1ull, 42ull, 20250811ull})
    CHECK(run_verify("lie", seed).all_pass());
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_verify("nope", 1), std::invalid_argument);
}
