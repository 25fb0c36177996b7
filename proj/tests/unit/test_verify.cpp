#include <doctest.h>

#include "bullchrome/errors.hpp"
#include "bullchrome/verify.hpp"
#include "oracles.hpp"

using namespace bullchrome;

namespace {

SuiteOptions up_to(int n) {
  SuiteOptions o;
  o.max_n = n;
  return o;
}

bool prime_bull_free(const oracle::Small& g) { return !oracle::has_bull(g) && oracle::prime_by_definition(g); }

}  // namespace

TEST_CASE("exhaustive suites at small orders") {
  const SuiteResult thm21 = run_suite("thm21", up_to(6));
  CHECK(thm21.pass);
  int primes = 0;
  for (int n = 1; n <= 6; ++n) primes += oracle::isomorphism_class_count(n, prime_bull_free);
  CHECK(thm21.checked == primes);

  CHECK(run_suite("layerlemma", up_to(6)).pass);
  const SuiteResult bound = run_suite("bound", up_to(6));
  CHECK(bound.pass);
  int bull_free = 0;
  for (int n = 1; n <= 6; ++n) bull_free += oracle::isomorphism_class_count(n, [](const oracle::Small& g) { return !oracle::has_bull(g); });
  CHECK(bound.checked == bull_free);

  SuiteOptions parallel = up_to(6);
  parallel.jobs = 3;
  CHECK(to_json(run_suite("bound", parallel)) == to_json(bound));
}

TEST_CASE("mycielski, phi and closure suites") {
  const SuiteResult m = run_suite("mycielski");
  CHECK(m.pass);
  CHECK(m.skipped == 0);
  SuiteOptions small_lp;
  small_lp.lp_cap = 14;
  const SuiteResult skipped = run_suite("mycielski", small_lp);
  CHECK(skipped.pass);
  CHECK(skipped.skipped == 1);
  CHECK(skipped.details.contains("skipped"));

  CHECK(run_suite("phi", up_to(500)).pass);

  SuiteOptions few;
  few.samples = 40;
  few.budget = 30;
  const SuiteResult c = run_suite("cstar", few);
  CHECK(c.pass);
  CHECK(c.checked == 40);
}

TEST_CASE("suite errors") {
  CHECK_THROWS_AS(run_suite("nope"), InvalidArgument);
  CHECK_THROWS_AS(run_suite("thm21", up_to(12)), CapExceeded);
  CHECK_THROWS_AS(run_suite("phi", up_to(0)), InvalidArgument);
  CHECK(suite_names().size() == 6);
}
