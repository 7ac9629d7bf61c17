#pragma once

#include <cstdint>
#include <utility>

#include "arthurlab/arthur_param.hpp"
#include "arthurlab/ems.hpp"
#include "arthurlab/ldata.hpp"
#include "arthurlab/vogan.hpp"

namespace arthurlab {

// splitmix64. One generator per trial, seeded via mix_seed, keeps suites
// reproducible no matter how trials are sharded across workers.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next();
  int below(int n);           // uniform in [0, n)
  int range(int lo, int hi);  // uniform inclusive
  bool coin();
};

uint64_t mix_seed(uint64_t seed, uint64_t trial);

// Good-parity parameter: <= 3 labels, <= 6 summands including the parity filler,
// dual dimension <= 30.
LocalArthurParameter random_good_parameter(Rng& rng, GroupFamily family);
LocalArthurParameter random_good_parameter(Rng& rng);

// Twist block over a one-coset arithmetic grid, 1-4 summands.
UnramifiedBlock random_unramified_block(Rng& rng);

// Two blocks over one shared grid whose summand sizes have equal totals.
std::pair<UnramifiedBlock, UnramifiedBlock> random_block_pair(Rng& rng);

// Blocks with rows sorted by (B, width); peelable additionally gives every
// width >= 2 row an l >= 1, so the peel/attach constructions apply.
ExtendedMultiSegment random_sorted_ems(Rng& rng, bool peelable);

LanglandsData random_langlands_data(Rng& rng);

}  // namespace arthurlab
