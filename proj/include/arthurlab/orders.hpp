#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "arthurlab/arthur_param.hpp"
#include "arthurlab/partition.hpp"

namespace arthurlab {

// O: reachability by raising operator chains.
// A: reversed dominance of the pA partitions (greater = smaller partition).
// D: dominance of the pD partitions.
// C: closure order of the attached L-parameters via rank triangles.
enum class OrderKind { O, A, D, C };

std::string_view order_kind_name(OrderKind k);
OrderKind parse_order_kind(const std::string& text);

// Throws TotalMismatch (A/D) or InfinitesimalMismatch (O/C) when the two
// parameters cannot be compared at all (different group); O may throw
// SearchBudgetExceeded on pathological searches.
OrderResult compare(const LocalArthurParameter& a, const LocalArthurParameter& b,
                    OrderKind kind);

struct ExtremalReport {
  std::vector<int> maxima;  // indices into the input list, ascending
  std::vector<int> minima;
};

ExtremalReport extremal(const std::vector<LocalArthurParameter>& list,
                        OrderKind kind);

// Transitive reduction (cover relations) of the order restricted to `list`,
// as (lower, upper) index pairs sorted ascending. Equal elements are not
// linked.
std::vector<std::pair<int, int>> poset_edges(
    const std::vector<LocalArthurParameter>& list, OrderKind kind);

}  // namespace arthurlab
