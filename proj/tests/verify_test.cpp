#include <string>
#include <vector>

#include "doctest.h"
#include "icln/verify.hpp"

using namespace icln;

TEST_CASE("every verification suite passes on a reduced budget") {
  VerifyOptions opt;
  opt.max_len = 4;
  opt.parity_len = 6;
  opt.agreement_len = 8;
  opt.samples = 200;
  std::vector<SuiteResult> results = run_verification(opt);

  const std::vector<std::string> kNames = {
      "negation-definitions", "forcing-monotonicity",   "perp-negation-at-root",
      "parity-of-validity",   "excluded-middle",        "double-perp-countermodel",
      "signature-criterion",  "normalizer-agreement",   "census-stability",
      "extreme-elements",     "implication-theorems",   "poset-figure",
      "published-table-errata", "height-sufficiency",   "forcing-locality",
      "es-recovery",          "enumeration-determinism",
  };
  REQUIRE(results.size() == kNames.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    CAPTURE(results[i].name);
    CAPTURE(results[i].detail);
    CHECK(results[i].name == kNames[i]);
    CHECK(results[i].passed);
    CHECK(results[i].checks > 0);
  }
  CHECK(all_passed(results));

  SUBCASE("one failure flips the aggregate") {
    results[3].passed = false;
    CHECK(!all_passed(results));
  }
}
