#include "arthurlab/half_int.hpp"

#include <cassert>
#include <cstdlib>

namespace arthurlab {

int HalfInt::as_int() const {
  assert(twice % 2 == 0 && "not a whole number");
  return twice / 2;
}

int HalfInt::floor() const {
  // Integer division truncates toward zero; adjust for negatives.
  int q = twice / 2;
  if (twice < 0 && twice % 2 != 0) --q;
  return q;
}

int HalfInt::ceil() const {
  int q = twice / 2;
  if (twice > 0 && twice % 2 != 0) ++q;
  return q;
}

std::string HalfInt::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }
HalfInt min(HalfInt a, HalfInt b) { return b < a ? b : a; }
HalfInt abs(HalfInt a) { return a.twice < 0 ? -a : a; }

}  // namespace arthurlab
