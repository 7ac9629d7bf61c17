#pragma once

#include <compare>
#include <string>

#include "arthurlab/half_int.hpp"
#include "arthurlab/labels.hpp"

namespace arthurlab {

// The segment D(rho)[x, -y]: exponents x, x-1, ..., -y. Stored by its two
// printed endpoints, so x + y must be a nonnegative integer; the segments used
// by the Langlands data here additionally have x - y < 0.
struct Segment {
  SupercuspidalLabel rho;
  HalfInt x;
  HalfInt y;

  int length() const;           // x + y + 1
  int dim() const;              // rho.dim * length
  std::string str() const;      // "D(tr(1,O))[-1/2,-5/2]"

  auto operator<=>(const Segment&) const = default;
};

Segment make_segment(const SupercuspidalLabel& rho, HalfInt x, HalfInt y);

}  // namespace arthurlab
