// Linked against the library built with a sign flipped in companion_of.

#include <doctest.h>

#include <sstream>

#include "simplext/check.hpp"
#include "simplext/cli.hpp"

TEST_CASE("the property suite reports a concrete counterexample") {
  simplext::CheckOptions options;
  options.max_degree = 4;
  options.moduli_per_degree = 5;
  options.pairs_per_modulus = 3;
  auto report = simplext::run_property_suite(options);
  CHECK_FALSE(report.passed());

  const simplext::PropertyResult* equivalence = nullptr;
  for (const auto& r : report.results)
    if (r.property == "strategy-equivalence" && r.ring == "rational") equivalence = &r;
  REQUIRE(equivalence != nullptr);
  CHECK_FALSE(equivalence->passed);
  CHECK(equivalence->degree >= 1);
  for (auto field : {"f=", " a=", " b=", " naive=", " kronecker=", " regular="})
    CHECK(equivalence->counterexample.find(field) != std::string::npos);
  CHECK(report.format().find("FAIL strategy-equivalence ring=rational") != std::string::npos);
}

TEST_CASE("check and mul --verify exit nonzero") {
  std::ostringstream out, err;
  simplext::CheckOptions options;
  options.max_degree = 3;
  options.moduli_per_degree = 2;
  options.pairs_per_modulus = 2;
  CHECK(simplext::cli::run_check(options, out, err) == simplext::cli::kExitCheckFailed);

  simplext::cli::ExtensionOptions ext;
  ext.modulus = "x^2+1";
  std::ostringstream mout, merr;
  CHECK(simplext::cli::run_mul(ext, "x", "x", "regular", true, mout, merr) == simplext::cli::kExitDisagreement);
  CHECK(mout.str().empty());
  CHECK(merr.str().find("disagreement") != std::string::npos);
}
