#pragma once

#include <compare>
#include <string>
#include <vector>

#include "arthurlab/arthur_param.hpp"
#include "arthurlab/ems.hpp"
#include "arthurlab/half_int.hpp"
#include "arthurlab/labels.hpp"
#include "arthurlab/segment.hpp"

namespace arthurlab {

// One factor rho (x) S_a of the tempered part, with its sign character value.
struct TemperedEntry {
  SupercuspidalLabel rho;
  int a = 1;
  int sign = 1;

  auto operator<=>(const TemperedEntry&) const = default;
};

// Langlands data L(segments; tempered part). Canonical order: segments by
// (x - y, rho, x) — most negative first — and tempered entries by (rho, a).
struct LanglandsData {
  GroupSpec group;
  std::vector<Segment> segments;
  std::vector<TemperedEntry> tempered;

  int dim() const;  // 2 * sum of segment dims + tempered dims
  void canonicalize();
  std::string str() const;  // "L(D(tr(1,O))[0,-1]; pi(tr(1,O)[2]+))"
  bool operator==(const LanglandsData&) const = default;
};

// Validates segment negativity (x < y) and entry sizes, then sorts.
LanglandsData make_langlands_data(GroupSpec group, std::vector<Segment> segments,
                                  std::vector<TemperedEntry> tempered);

LanglandsData insert_segments(const LanglandsData& pi,
                              const std::vector<Segment>& segs);
// Throws InvariantBroken when a segment is missing.
LanglandsData remove_segments(const LanglandsData& pi,
                              const std::vector<Segment>& segs);

struct ReduceUpperResult {
  LanglandsData pi_minus;
  SupercuspidalLabel rho;
  HalfInt x;
  HalfInt y;
  int r = 0;
};

// Strips every copy of the front segment (most negative x - y; ties by label,
// then x). Throws Tempered when there is no segment.
ReduceUpperResult reduce_upper(const LanglandsData& pi);

struct ReduceLowerResult {
  LanglandsData pi_minus;
  std::vector<Segment> removed;
  SupercuspidalLabel rho;
  HalfInt x_min;
};

// Picks the least label owning a segment and strips all its segments with the
// minimal x. Throws Tempered when there is no segment.
ReduceLowerResult reduce_lower(const LanglandsData& pi);

struct MaxBReport {
  bool ok = false;        // -max_b + 1 <= min(x - y, 0) for every label
  bool equality = false;  // equality holds for every label
};

MaxBReport max_b_check(const LanglandsData& pi, const LocalArthurParameter& psi);

struct PredicateResult {
  bool ok = false;
  std::string failed;  // first violated requirement, empty when ok
  LocalArthurParameter psi_plus;  // meaningful only when ok
};

// Requirements for lifting psi through the re-attachment of r copies of
// D(rho)[x,-y]: when y-x-1 > 0, psi must contain the summand
// rho (x) S_{x+y+1} (x) S_{y-x-1} with multiplicity >= r; every rho-summand
// needs b <= y-x+1, with a > x+y+1 forced when b = y-x+1. psi_plus swaps the
// r narrow summands for wide ones and grows the group accordingly.
PredicateResult predicate_upper(const LocalArthurParameter& psi,
                                const SupercuspidalLabel& rho, HalfInt x,
                                HalfInt y, int r);

// Requirements for lifting psi through the re-attachment of the removed
// multiset (all sharing x = x_min): psi must contain the matching narrow
// summands, and every rho-summand with a - b <= 2 * x_min must have b = 1.
// Empty removed is trivially ok with psi_plus = psi.
PredicateResult predicate_lower(const LocalArthurParameter& psi,
                                const std::vector<Segment>& removed,
                                HalfInt x_min);

// The diagonal parameter of a tempered datum: per label, rows
// ([ (a-1)/2, (a-1)/2 ], 0, sign), a ascending. Throws Tempered when the
// datum still has segments.
ExtendedMultiSegment tempered_ems_of(const LanglandsData& pi);

}  // namespace arthurlab
