#pragma once

#include <compare>
#include <string>

namespace arthurlab {

// Element of (1/2)Z stored as its double, so arithmetic stays exact.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt whole(int n) { return HalfInt{2 * n}; }
  static constexpr HalfInt halves(int n) { return HalfInt{n}; }

  constexpr bool is_integer() const { return twice % 2 == 0; }
  // Whole-number value; only valid when is_integer().
  int as_int() const;
  int floor() const;
  int ceil() const;

  constexpr HalfInt operator-() const { return HalfInt{-twice}; }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }
  constexpr HalfInt operator*(int k) const { return HalfInt{twice * k}; }

  constexpr HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice -= o.twice; return *this; }

  auto operator<=>(const HalfInt&) const = default;

  // "3", "-2", "1/2", "-5/2" (always lowest terms).
  std::string str() const;
};

constexpr HalfInt operator*(int k, HalfInt h) { return h * k; }

HalfInt max(HalfInt a, HalfInt b);
HalfInt min(HalfInt a, HalfInt b);
HalfInt abs(HalfInt a);

}  // namespace arthurlab
