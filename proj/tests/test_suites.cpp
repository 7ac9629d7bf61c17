#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "arthurlab/rng.hpp"
#include "arthurlab/suites.hpp"

using namespace arthurlab;

TEST_CASE("the suite registry") {
  const auto& names = suite_names();
  REQUIRE(names.size() == 6);
  CHECK(names[0] == "monotonicity");
  CHECK(names[1] == "duality");
  CHECK(names[2] == "partition-triangle");
  CHECK(names[3] == "examples");
  CHECK(names[4] == "ems-chain");
  CHECK(names[5] == "arthur-steps");
  CHECK_THROWS_AS(run_suite("no-such-suite", 1, 1), std::invalid_argument);
}

TEST_CASE("zero trials short-circuit to a pass") {
  SuiteReport rep = run_suite("monotonicity", 5, 0);
  CHECK(rep.pass());
  CHECK(rep.trials == 0);
  CHECK(rep.failures == 0);
  CHECK(rep.first_failure == -1);
}

TEST_CASE("per-trial seeds keep reports reproducible") {
  SuiteReport a = run_suite("duality", 42, 30);
  SuiteReport b = run_suite("duality", 42, 30);
  CHECK(a.failures == b.failures);
  CHECK(a.first_failure == b.first_failure);
  CHECK(a.first_counterexample == b.first_counterexample);
  CHECK(a.trials == 30);
}

TEST_CASE("random parameters respect the documented bounds") {
  Rng rng(911);
  for (int k = 0; k < 200; ++k) {
    LocalArthurParameter psi = random_good_parameter(rng);
    CHECK(psi.dim() == psi.group.dual_dim());
    CHECK(psi.dim() <= 30);
    CHECK(psi.summands.size() <= 6);
    ValidationReport v = validate_parameter(psi);
    CHECK(v.dimension_ok);
    CHECK(v.all_good_parity);
  }
}

TEST_CASE("short runs of every randomized suite stay clean") {
  for (const char* name : {"monotonicity", "duality", "partition-triangle",
                           "ems-chain", "arthur-steps"}) {
    SuiteReport rep = run_suite(name, 1, 40);
    INFO(rep.name << ": " << rep.first_counterexample);
    CHECK(rep.pass());
    CHECK(rep.trials == 40);
  }
}

TEST_CASE("single trials are callable directly") {
  CHECK(monotonicity_trial(1001).empty());
  CHECK(duality_trial(1002).empty());
  CHECK(partition_triangle_trial(1003).empty());
  CHECK(sandwich_trial(1004).empty());
  CHECK(ems_chain_trial(1005).empty());
  CHECK(arthur_steps_trial(1006).empty());
  CHECK(roundtrip_trial(1007).empty());
}

TEST_CASE("the example corpus replays clean") {
  // CMake points ARTHURLAB_FIXTURES at the shipped corpus.
  SuiteReport rep = run_suite("examples", 1, 1);
  INFO(rep.first_counterexample);
  CHECK(rep.pass());
  CHECK(rep.trials > 100);
}

TEST_CASE("a missing corpus is a reported failure, not a crash") {
  SuiteReport rep = run_suite("examples", 1, 1, "/no/such/file.json");
  CHECK(!rep.pass());
  CHECK(rep.failures >= 1);
  CHECK(!rep.first_counterexample.empty());
}
