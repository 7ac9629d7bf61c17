#include "arthurlab/orders.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "arthurlab/errors.hpp"
#include "arthurlab/l_param.hpp"
#include "arthurlab/operators.hpp"
#include "arthurlab/vogan.hpp"

namespace arthurlab {

namespace {

constexpr int kMaxDepth = 64;
constexpr size_t kMaxVisited = 1'000'000;

// True when `upper` is reachable from `lower` by raising moves. Prunes with
// the A-order, which every raising move strictly increases.
bool reaches_by_raising(const LocalArthurParameter& lower,
                        const LocalArthurParameter& upper) {
  if (lower == upper) return true;
  {
    Partition pa_low = partitions_of(lower).pA;
    Partition pa_up = partitions_of(upper).pA;
    if (reverse(dominance_compare(pa_low, pa_up)) != OrderResult::Less)
      return false;  // upper must sit strictly above lower in the A-order
  }
  std::set<std::vector<ArthurSummand>> visited;
  std::deque<std::pair<LocalArthurParameter, int>> queue;
  visited.insert(lower.summands);
  queue.emplace_back(lower, 0);
  while (!queue.empty()) {
    auto [psi, depth] = std::move(queue.front());
    queue.pop_front();
    if (depth >= kMaxDepth)
      fail(Errc::SearchBudgetExceeded, "raising chain exceeded depth limit");
    for (auto& mv : enumerate_raising(psi)) {
      if (mv.result == upper) return true;
      if (compare(mv.result, upper, OrderKind::A) != OrderResult::Less) continue;
      if (!visited.insert(mv.result.summands).second) continue;
      if (visited.size() > kMaxVisited)
        fail(Errc::SearchBudgetExceeded, "raising search exceeded node limit");
      queue.emplace_back(std::move(mv.result), depth + 1);
    }
  }
  return false;
}

}  // namespace

std::string_view order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::O: return "O";
    case OrderKind::A: return "A";
    case OrderKind::D: return "D";
    case OrderKind::C: return "C";
  }
  return "?";
}

OrderKind parse_order_kind(const std::string& text) {
  if (text == "O") return OrderKind::O;
  if (text == "A") return OrderKind::A;
  if (text == "D") return OrderKind::D;
  if (text == "C") return OrderKind::C;
  throw ParseError(0, "order kind O, A, D, or C");
}

OrderResult compare(const LocalArthurParameter& a, const LocalArthurParameter& b,
                    OrderKind kind) {
  switch (kind) {
    case OrderKind::A: {
      if (a.group != b.group)
        fail(Errc::TotalMismatch, "parameters for different groups");
      return reverse(dominance_compare(partitions_of(a).pA, partitions_of(b).pA));
    }
    case OrderKind::D: {
      if (a.group != b.group)
        fail(Errc::TotalMismatch, "parameters for different groups");
      return dominance_compare(partitions_of(a).pD, partitions_of(b).pD);
    }
    case OrderKind::C: {
      if (a.group != b.group)
        fail(Errc::InfinitesimalMismatch, "parameters for different groups");
      return closure_compare(phi_of(a), phi_of(b));
    }
    case OrderKind::O: {
      if (a.group != b.group)
        fail(Errc::InfinitesimalMismatch, "parameters for different groups");
      if (a == b) return OrderResult::Equal;
      if (reaches_by_raising(b, a)) return OrderResult::Greater;
      if (reaches_by_raising(a, b)) return OrderResult::Less;
      return OrderResult::Incomparable;
    }
  }
  fail(Errc::BadKind, "unknown order kind");
}

ExtremalReport extremal(const std::vector<LocalArthurParameter>& list,
                        OrderKind kind) {
  int n = static_cast<int>(list.size());
  std::vector<std::vector<OrderResult>> rel(n, std::vector<OrderResult>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rel[i][j] = i == j ? OrderResult::Equal : compare(list[i], list[j], kind);
  ExtremalReport rep;
  for (int i = 0; i < n; ++i) {
    bool is_max = true, is_min = true;
    for (int j = 0; j < n; ++j) {
      if (rel[i][j] == OrderResult::Less) is_max = false;
      if (rel[i][j] == OrderResult::Greater) is_min = false;
    }
    if (is_max) rep.maxima.push_back(i);
    if (is_min) rep.minima.push_back(i);
  }
  return rep;
}

std::vector<std::pair<int, int>> poset_edges(
    const std::vector<LocalArthurParameter>& list, OrderKind kind) {
  int n = static_cast<int>(list.size());
  std::vector<std::vector<OrderResult>> rel(n, std::vector<OrderResult>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rel[i][j] = i == j ? OrderResult::Equal : compare(list[i], list[j], kind);
  std::vector<std::pair<int, int>> edges;
  for (int low = 0; low < n; ++low) {
    for (int up = 0; up < n; ++up) {
      if (rel[up][low] != OrderResult::Greater) continue;
      bool covered = false;
      for (int mid = 0; mid < n && !covered; ++mid) {
        if (mid == low || mid == up) continue;
        if (rel[up][mid] == OrderResult::Greater &&
            rel[mid][low] == OrderResult::Greater)
          covered = true;
      }
      if (!covered) edges.emplace_back(low, up);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace arthurlab
