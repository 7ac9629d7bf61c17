#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arthurlab {

struct SuiteReport {
  std::string name;
  uint64_t seed = 0;
  uint64_t trials = 0;
  uint64_t failures = 0;
  int64_t first_failure = -1;        // failing trial index, -1 when none
  std::string first_counterexample;  // empty when none
  int64_t millis = 0;                // wall time; not part of stable output

  bool pass() const { return failures == 0; }
};

const std::vector<std::string>& suite_names();

// One randomized trial each; the return value is empty on pass and carries a
// serialized counterexample otherwise. Deterministic in trial_seed.
std::string monotonicity_trial(uint64_t trial_seed);
std::string duality_trial(uint64_t trial_seed);
std::string partition_triangle_trial(uint64_t trial_seed);
std::string sandwich_trial(uint64_t trial_seed);
std::string ems_chain_trial(uint64_t trial_seed);
std::string arthur_steps_trial(uint64_t trial_seed);
std::string roundtrip_trial(uint64_t trial_seed);

// name is one of suite_names(); throws std::invalid_argument otherwise.
// Trials shard across workers with per-trial seeds, so the report does not
// depend on the sharding. The examples suite replaces `trials` by the corpus
// case count (trials == 0 still short-circuits to an empty pass report);
// corpus path resolution: fixtures_path argument, then ARTHURLAB_FIXTURES,
// then "fixtures/corpus.json".
SuiteReport run_suite(const std::string& name, uint64_t seed, uint64_t trials,
                      const std::string& fixtures_path = "");

}  // namespace arthurlab
