#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arthurlab/half_int.hpp"
#include "arthurlab/l_param.hpp"
#include "arthurlab/partition.hpp"

namespace arthurlab {

// Strict upper triangle of an (r+1) x (r+1) matrix indexed 1 <= alpha <= beta <= r
// as in the rank criterion: entry(alpha, beta) counts ranks over the grid
// window lambda_{alpha-1} .. lambda_beta.
struct RankTriangle {
  int r = 0;
  std::vector<std::vector<int>> rows;  // rows[a-1] holds entries (a, a..r)

  static RankTriangle zero(int r);
  int entry(int alpha, int beta) const;
  int& entry_ref(int alpha, int beta);

  std::string str() const;  // "1 1 1 / 3 1 / 1"; r == 0 prints "."
  static RankTriangle parse(const std::string& text);

  bool operator==(const RankTriangle&) const = default;
};

RankTriangle operator+(const RankTriangle& a, const RankTriangle& b);

// Entrywise comparison; throws TotalMismatch when sizes differ.
OrderResult triangle_compare(const RankTriangle& a, const RankTriangle& b);

// One unramified twist block: summands |.|^x (x) S_a over a fixed grid
// lambda_0 < ... < lambda_r of the exponents that occur.
struct UnramifiedBlock {
  std::vector<HalfInt> grid;
  std::vector<std::pair<HalfInt, int>> summands;  // (x, a), sorted
};

// Grid must be strictly increasing; required for every triangle computation.
void check_grid(const std::vector<HalfInt>& grid);

// The matrix M_{|.|^x (x) S_a}: entry (alpha, beta) is 1 exactly when every
// grid value in the window lies among the exponents x-(a-1)/2 .. x+(a-1)/2;
// a == 1 gives the zero matrix.
RankTriangle m_matrix(HalfInt x, int a, const std::vector<HalfInt>& grid);

RankTriangle rank_triangle(const UnramifiedBlock& block);

// Closed form for the triangle entry of a single summand with coordinates
// (A, B) at grid points y = lambda_{alpha-1}, x = lambda_beta:
// max{A + B - max(x, B) - max(-y, B) + 1, 0}.
int rank_entry_closed_form(HalfInt A, HalfInt B, HalfInt x, HalfInt y);

// Splits phi by label, strips the labels, and checks the comparison
// assumptions per block: self-dual label, grid symmetric about 0, consecutive
// grid gaps positive integers. Throws AssumptionViolated otherwise.
std::map<SupercuspidalLabel, UnramifiedBlock> unramified_reduction(
    const LocalLParameter& phi);

// Removes the common summand multiset from both inputs.
std::pair<LocalLParameter, LocalLParameter> cancel_common(
    const LocalLParameter& a, const LocalLParameter& b);

// Closure comparison: requires equal groups and equal infinitesimal classes
// (InfinitesimalMismatch), cancels the common part, reduces per label, and
// combines the entrywise triangle comparisons of all blocks.
OrderResult closure_compare(const LocalLParameter& a, const LocalLParameter& b);

// Recovers the partition of n attached to a triangle over an (r+1)-point grid
// via the diagonal-sum recursion; throws NegativeMultiplicity when the
// triangle is not of partition type for this n.
Partition partition_from_triangle(const RankTriangle& t, int n);

}  // namespace arthurlab
