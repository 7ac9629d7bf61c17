#include "arthurlab/partition.hpp"

#include <algorithm>
#include <numeric>

#include "arthurlab/errors.hpp"

namespace arthurlab {

std::string_view order_result_name(OrderResult r) {
  switch (r) {
    case OrderResult::Greater: return "Greater";
    case OrderResult::Less: return "Less";
    case OrderResult::Equal: return "Equal";
    case OrderResult::Incomparable: return "Incomparable";
  }
  return "Unknown";
}

Partition Partition::of(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) fail(Errc::InvariantBroken, "negative partition part");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition{std::move(parts)};
}

int Partition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::str() const {
  std::string out = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  out += "]";
  return out;
}

OrderResult dominance_compare(const Partition& a, const Partition& b) {
  if (a.total() != b.total())
    fail(Errc::TotalMismatch, "partition totals differ: " +
                                  std::to_string(a.total()) + " vs " +
                                  std::to_string(b.total()));
  size_t n = std::max(a.parts.size(), b.parts.size());
  bool ge = true, le = true;
  long sa = 0, sb = 0;
  for (size_t i = 0; i < n; ++i) {
    sa += i < a.parts.size() ? a.parts[i] : 0;
    sb += i < b.parts.size() ? b.parts[i] : 0;
    if (sa < sb) ge = false;
    if (sa > sb) le = false;
  }
  if (ge && le) return OrderResult::Equal;
  if (ge) return OrderResult::Greater;
  if (le) return OrderResult::Less;
  return OrderResult::Incomparable;
}

OrderResult reverse(OrderResult r) {
  switch (r) {
    case OrderResult::Greater: return OrderResult::Less;
    case OrderResult::Less: return OrderResult::Greater;
    default: return r;
  }
}

}  // namespace arthurlab
