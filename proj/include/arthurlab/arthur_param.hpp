#pragma once

#include <compare>
#include <string>
#include <vector>

#include "arthurlab/half_int.hpp"
#include "arthurlab/labels.hpp"
#include "arthurlab/partition.hpp"

namespace arthurlab {

// One summand rho (x) S_a (x) S_b. The (A, B) coordinates are
// A = (a + b)/2 - 1 and B = (a - b)/2.
struct ArthurSummand {
  SupercuspidalLabel rho;
  int a = 1;
  int b = 1;

  HalfInt A() const { return HalfInt::halves(a + b - 2); }
  HalfInt B() const { return HalfInt::halves(a - b); }
  int dim() const { return rho.dim * a * b; }

  static ArthurSummand from_AB(const SupercuspidalLabel& rho, HalfInt A, HalfInt B);

  auto operator<=>(const ArthurSummand&) const = default;
};

// Multiset of summands in canonical (rho, a, b) order.
struct LocalArthurParameter {
  GroupSpec group;
  std::vector<ArthurSummand> summands;

  int dim() const;
  void canonicalize();
  bool operator==(const LocalArthurParameter&) const = default;
};

LocalArthurParameter make_parameter(GroupSpec group,
                                    std::vector<ArthurSummand> summands);

// Parity a summand must satisfy to lie in the good-parity part for `family`.
bool summand_good_parity(GroupFamily family, const ArthurSummand& s);

struct ValidationReport {
  bool dimension_ok = false;
  bool all_good_parity = false;
  std::vector<bool> summand_good_parity;  // aligned with canonical order
  std::vector<std::string> notes;
  bool ok() const { return dimension_ok; }
};

ValidationReport validate_parameter(const LocalArthurParameter& psi);

// Splits psi as (good-parity part) + (pairs {s, s-dual}): every summand outside
// the good-parity part must pair off with its rho-dual partner of the same
// (a, b) — bad-parity self-dual summands therefore need even multiplicity.
// Throws UnpairableBadParity when the complement cannot be paired.
struct GoodParitySplit {
  std::vector<ArthurSummand> good;    // the good-parity part
  std::vector<ArthurSummand> paired;  // one representative per dual pair
};

GoodParitySplit good_parity_split(const LocalArthurParameter& psi);

// Swaps every (a, b) and replaces each label by its dual; an involution
// preserving group and dimension.
LocalArthurParameter dual_psi(const LocalArthurParameter& psi);

// pA collects b with multiplicity dim(rho)*a; pD collects a with multiplicity
// dim(rho)*b. pD(psi) equals pA(dual(psi)).
struct PartitionPair {
  Partition pA;
  Partition pD;
};

PartitionPair partitions_of(const LocalArthurParameter& psi);

// The two parameters with the same infinitesimal class obtained by spreading
// each summand fully to one side: `open` replaces rho(x)S_a(x)S_b by
// sum_k rho (x) S_{a+b-1-2k} (x) S_1 (k < min(a,b)); `zero` is its dual.
struct LambdaExtremes {
  LocalArthurParameter open;
  LocalArthurParameter zero;
};

LambdaExtremes extremal_parameters_of_lambda(const LocalArthurParameter& psi);

}  // namespace arthurlab
