#pragma once

#include <compare>
#include <string>
#include <vector>

#include "arthurlab/arthur_param.hpp"
#include "arthurlab/half_int.hpp"
#include "arthurlab/labels.hpp"
#include "arthurlab/segment.hpp"

namespace arthurlab {

// One decorated segment ([A, B], l, eta): width b = A - B + 1 >= 1,
// 0 <= 2l <= b, eta in {-1, +1} and normalized to +1 when 2l == b (the sign
// is immaterial there).
struct ExtendedSegment {
  HalfInt A;
  HalfInt B;
  int l = 0;
  int eta = 1;

  int width() const;  // b = A - B + 1
  int a() const;      // A + B + 1
  ExtendedSegment normalized() const;
  std::string str() const;  // "([3,-3],l=3,+)"

  auto operator<=>(const ExtendedSegment&) const = default;
};

// Validates ranges and returns the normalized row; throws InvariantBroken.
ExtendedSegment make_extended_segment(HalfInt A, HalfInt B, int l, int eta);

struct EmsBlock {
  SupercuspidalLabel rho;
  std::vector<ExtendedSegment> rows;  // kept in the user-chosen admissible order

  bool operator==(const EmsBlock&) const = default;
};

struct ExtendedMultiSegment {
  GroupSpec group;
  std::vector<EmsBlock> blocks;  // sorted by label

  const EmsBlock* find_block(const SupercuspidalLabel& rho) const;
  EmsBlock* find_block(const SupercuspidalLabel& rho);
  std::string str() const;
  bool operator==(const ExtendedMultiSegment&) const = default;
};

// Sorts blocks by label (row order inside a block is preserved) and drops
// empty blocks.
ExtendedMultiSegment make_ems(GroupSpec group, std::vector<EmsBlock> blocks);

struct EmsValidation {
  bool row_ranges_ok = true;
  bool order_admissible = true;   // A_i < A_j and B_i < B_j force i < j
  bool order_b_sorted = true;     // B_i < B_j forces i < j (the stronger form)
  bool sign_ok = true;            // product over rows of (-1)^{floor(b/2)+l} eta^b
  bool psi_good_parity = true;
  bool dimension_ok = true;
  int sign = 1;
  std::vector<std::string> notes;
  bool ok() const {
    return row_ranges_ok && order_admissible && sign_ok && psi_good_parity &&
           dimension_ok;
  }
};

EmsValidation validate_ems(const ExtendedMultiSegment& ems);

// Row ([A,B], l, eta) of the rho block contributes rho (x) S_{A+B+1} (x)
// S_{A-B+1}.
LocalArthurParameter psi_of_ems(const ExtendedMultiSegment& ems);

// Total dimension of the attached parameter, straight off the rows.
int psi_dim_of(const ExtendedMultiSegment& ems);

// Row surgery. `shift` sends [A,B] to [A+d,B+d] keeping l; `add` sends
// ([A,B], l) to ([A+d,B-d], l+d). Out-of-range results throw InvariantBroken;
// rows shrunk to width 0 with l == 0 are removed.
enum class RowSurgery { Shift, Add };

ExtendedMultiSegment row_surgery(const ExtendedMultiSegment& ems,
                                 const SupercuspidalLabel& rho, int row, int d,
                                 RowSurgery op);

// Applies the same surgery to every row of the rho block.
ExtendedMultiSegment block_surgery(const ExtendedMultiSegment& ems,
                                   const SupercuspidalLabel& rho, int d,
                                   RowSurgery op);

struct EMinusResult {
  ExtendedMultiSegment ems;
  Segment removed;  // D(rho)[B, -A] of the consumed run
  int r = 0;        // run length = removed multiplicity
};

// Peels the first maximal-width run of the rho block: requires the block to
// be B-sorted (PPrimeViolated), a row of width > 1 (NoWideRow), and no
// narrower row behind the run in its B-class (PPrimeViolated).
EMinusResult e_minus(const ExtendedMultiSegment& ems,
                     const SupercuspidalLabel& rho);

struct ERhoMinusResult {
  ExtendedMultiSegment ems;
  std::vector<Segment> removed;
};

// Peels at the least B among rows with A > B: every row below that B must be
// a point row (DecompositionFailed), rows at that B need l >= 1 (LZero);
// NoWideRow when the block has no row with A > B.
ERhoMinusResult e_rho_minus(const ExtendedMultiSegment& ems,
                            const SupercuspidalLabel& rho);

struct EPlusUpperResult {
  ExtendedMultiSegment ems;
  bool added = false;  // true: widened existing rows; false: inserted new rows
};

// Inverse of e_minus along the segment D(rho)[x,-y] with multiplicity r.
// y - x - 1 == 0 inserts r rows ([y,x],1,+1); y - x - 1 > 0 widens the first
// r rows equal to [y-1, x+1]. Violated preconditions throw HypothesisFailed.
EPlusUpperResult e_plus_upper(const ExtendedMultiSegment& ems,
                              const SupercuspidalLabel& rho, HalfInt x,
                              HalfInt y, int r);

// Inverse of e_rho_minus: re-attaches the removed segments (all sharing the
// same x). Point segments (y == x+1) become inserted rows ([x+1,x],1,+1);
// wider ones widen matching rows [y-1, x+1]. Throws DecompositionFailed /
// HypothesisFailed when the rows are not there.
ExtendedMultiSegment e_plus_lower(const ExtendedMultiSegment& ems,
                                  const SupercuspidalLabel& rho,
                                  const std::vector<Segment>& removed);

// For a parameter whose rows are all ([A,A],0,+1): rows become
// ([A,-A],ceil(A),+1) per block in reversed order. NotTemperedAllPlus
// otherwise.
ExtendedMultiSegment dual_tempered_ems(const ExtendedMultiSegment& ems);

}  // namespace arthurlab
