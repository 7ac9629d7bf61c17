#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace arthurlab {

enum class OrderResult { Greater, Less, Equal, Incomparable };

std::string_view order_result_name(OrderResult r);

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  // Sorts descending and drops zeros; rejects negative parts.
  static Partition of(std::vector<int> parts);
  int total() const;
  std::string str() const;  // "[4,2,2]"; empty partition is "[]"

  auto operator<=>(const Partition&) const = default;
};

// Dominance order on partitions of the same total (prefix-sum comparison);
// throws TotalMismatch otherwise. Greater means `a` dominates `b`.
OrderResult dominance_compare(const Partition& a, const Partition& b);

OrderResult reverse(OrderResult r);

}  // namespace arthurlab
