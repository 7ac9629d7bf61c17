#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "arthurlab/arthur_param.hpp"
#include "arthurlab/half_int.hpp"
#include "arthurlab/labels.hpp"

namespace arthurlab {

// One summand rho |.|^x (x) S_a of a local L-parameter.
struct LSummand {
  SupercuspidalLabel rho;
  HalfInt x;
  int a = 1;

  int dim() const { return rho.dim * a; }

  auto operator<=>(const LSummand&) const = default;
};

struct LocalLParameter {
  GroupSpec group;
  std::vector<LSummand> summands;

  int dim() const;
  void canonicalize();
  bool operator==(const LocalLParameter&) const = default;
};

LocalLParameter make_l_parameter(GroupSpec group, std::vector<LSummand> summands);

// rho (x) S_a (x) S_b spreads to sum_{t<b} rho |.|^{(b-1)/2 - t} (x) S_a.
LocalLParameter phi_of(const LocalArthurParameter& psi);

// Multiset of exponents per label: summand rho|.|^x (x) S_a contributes
// {x + (a-1)/2 - s : 0 <= s < a}.
struct InfinitesimalClass {
  std::map<SupercuspidalLabel, std::vector<HalfInt>> exponents;  // sorted

  bool operator==(const InfinitesimalClass&) const = default;
  std::string str() const;
};

InfinitesimalClass infinitesimal_of(const LocalLParameter& phi);
InfinitesimalClass infinitesimal_of(const LocalArthurParameter& psi);

}  // namespace arthurlab
