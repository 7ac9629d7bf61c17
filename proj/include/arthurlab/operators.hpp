#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arthurlab/arthur_param.hpp"

namespace arthurlab {

// Raising kinds come first; each lowering kind is the inverse of the raising
// kind three places earlier.
enum class OperatorKind {
  UiInverse,
  DualUiDual,
  DualMinus,
  Ui,
  DualUiDualInverse,
  DualPlus,
};

std::string_view operator_kind_name(OperatorKind k);
bool is_raising(OperatorKind k);
OperatorKind inverse_kind(OperatorKind k);

// Indices are 0-based positions in the canonical summand order of the
// parameter the operator is applied to, for every kind. Single-row kinds use
// `i` only. For the inverse kinds, i != j un-merges the two addressed rows
// (their cross-pairing is forced, so the move is determined), while i == j
// splits one row in two; the split point is not determined by the indices, so
// `split_twice` may pin it (as a doubled half-integer, the smaller of the two
// A-values produced). kNoSplit leaves it unpinned.
struct OperatorDescriptor {
  static constexpr int kNoSplit = -(1 << 30);

  OperatorKind kind = OperatorKind::Ui;
  SupercuspidalLabel rho;
  int i = -1;
  int j = -1;
  int split_twice = kNoSplit;

  bool has_split() const { return split_twice != kNoSplit; }
  std::string str() const;
};

// Row-pair applicability of the union move at (i, j): requires
// A_j >= A_i + 1 >= B_j > B_i plus the gap condition that no third row of the
// same label has B strictly between B_i and B_j with A strictly between A_i
// and A_j. Throws BadIndex when an index is out of range; same index, label
// mismatch, or a non-self-dual label report false.
bool applicable_ui(const LocalArthurParameter& psi, int i, int j);

// Mirrored condition A_i >= A_j + 1 >= -B_i > -B_j with the reflected gap
// requirement; equals conjugation of the union move by duality.
bool applicable_dual_ui_dual(const LocalArthurParameter& psi, int i, int j);

struct ApplyResult {
  LocalArthurParameter parameter;
  bool changed = false;
};

// Total: a descriptor that does not apply (bad indices included) returns the
// input with changed == false. For an inverse kind with i == j and no split
// pin, several split points may be valid; the canonically least preimage is
// returned.
ApplyResult apply(const LocalArthurParameter& psi, const OperatorDescriptor& op);

struct RaisingMove {
  OperatorDescriptor op;
  LocalArthurParameter result;
};

// All single raising moves out of psi, deduplicated by resulting parameter
// (first kind in enumeration order wins), in a deterministic order.
std::vector<RaisingMove> enumerate_raising(const LocalArthurParameter& psi);

// Same, restricted to one kind and without cross-kind deduplication.
std::vector<RaisingMove> enumerate_raising_of_kind(const LocalArthurParameter& psi,
                                                   OperatorKind kind);

// Kind-level transport across duality: conjugating a raising move by duals
// swaps UiInverse with DualUiDual and fixes DualMinus. Lowering kinds throw
// BadKind. Indices and split are passed through unchanged.
OperatorDescriptor dual_transport(const OperatorDescriptor& op);

// Transport with index re-targeting: `context` is the parameter op applies
// to, and the result addresses rows of dual(apply(context, op)), so that
// applying the transported move there yields dual(context). Throws BadIndex
// when op does not apply to context.
OperatorDescriptor dual_transport(const OperatorDescriptor& op,
                                  const LocalArthurParameter& context);

}  // namespace arthurlab
