#include "arthurlab/vogan.hpp"

#include <algorithm>
#include <sstream>

#include "arthurlab/errors.hpp"

namespace arthurlab {

RankTriangle RankTriangle::zero(int r) {
  if (r < 0) fail(Errc::InvariantBroken, "triangle size must be nonnegative");
  RankTriangle t;
  t.r = r;
  for (int a = 1; a <= r; ++a) t.rows.emplace_back(r - a + 1, 0);
  return t;
}

int RankTriangle::entry(int alpha, int beta) const {
  if (alpha < 1 || beta < alpha || beta > r)
    fail(Errc::BadIndex, "triangle entry (" + std::to_string(alpha) + "," +
                             std::to_string(beta) + ") out of range");
  return rows[alpha - 1][beta - alpha];
}

int& RankTriangle::entry_ref(int alpha, int beta) {
  if (alpha < 1 || beta < alpha || beta > r)
    fail(Errc::BadIndex, "triangle entry (" + std::to_string(alpha) + "," +
                             std::to_string(beta) + ") out of range");
  return rows[alpha - 1][beta - alpha];
}

std::string RankTriangle::str() const {
  if (r == 0) return ".";
  std::string out;
  for (int a = 1; a <= r; ++a) {
    if (a > 1) out += " / ";
    for (int b = a; b <= r; ++b) {
      if (b > a) out += " ";
      out += std::to_string(entry(a, b));
    }
  }
  return out;
}

RankTriangle RankTriangle::parse(const std::string& text) {
  if (text == ".") return RankTriangle::zero(0);
  std::vector<std::vector<int>> rows;
  std::string token;
  std::vector<int> current;
  std::istringstream in(text);
  while (in >> token) {
    if (token == "/") {
      rows.push_back(current);
      current.clear();
      continue;
    }
    try {
      size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument("trail");
      current.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(0, "triangle entry or '/' in \"" + text + "\"");
    }
  }
  rows.push_back(current);
  int r = static_cast<int>(rows.size());
  RankTriangle t = RankTriangle::zero(r);
  for (int a = 1; a <= r; ++a) {
    if (static_cast<int>(rows[a - 1].size()) != r - a + 1)
      throw ParseError(0, "triangle row " + std::to_string(a) + " with " +
                              std::to_string(r - a + 1) + " entries");
    for (int b = a; b <= r; ++b) t.entry_ref(a, b) = rows[a - 1][b - a];
  }
  return t;
}

RankTriangle operator+(const RankTriangle& a, const RankTriangle& b) {
  if (a.r != b.r) fail(Errc::TotalMismatch, "triangle sizes differ");
  RankTriangle out = a;
  for (int alpha = 1; alpha <= a.r; ++alpha)
    for (int beta = alpha; beta <= a.r; ++beta)
      out.entry_ref(alpha, beta) += b.entry(alpha, beta);
  return out;
}

OrderResult triangle_compare(const RankTriangle& a, const RankTriangle& b) {
  if (a.r != b.r) fail(Errc::TotalMismatch, "triangle sizes differ");
  bool ge = true, le = true;
  for (int alpha = 1; alpha <= a.r; ++alpha)
    for (int beta = alpha; beta <= a.r; ++beta) {
      int va = a.entry(alpha, beta), vb = b.entry(alpha, beta);
      if (va < vb) ge = false;
      if (va > vb) le = false;
    }
  if (ge && le) return OrderResult::Equal;
  if (ge) return OrderResult::Greater;
  if (le) return OrderResult::Less;
  return OrderResult::Incomparable;
}

void check_grid(const std::vector<HalfInt>& grid) {
  for (size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k - 1] < grid[k]))
      fail(Errc::AssumptionViolated, "grid must be strictly increasing");
}

RankTriangle m_matrix(HalfInt x, int a, const std::vector<HalfInt>& grid) {
  check_grid(grid);
  int r = static_cast<int>(grid.size()) - 1;
  if (r < 0) fail(Errc::AssumptionViolated, "grid must be nonempty");
  RankTriangle t = RankTriangle::zero(r);
  if (a <= 1) return t;
  HalfInt lo = x - HalfInt::halves(a - 1);
  HalfInt hi = x + HalfInt::halves(a - 1);
  auto inside = [&](HalfInt v) {
    if (v < lo || hi < v) return false;
    return (v - lo).is_integer();
  };
  for (int alpha = 1; alpha <= r; ++alpha) {
    for (int beta = alpha; beta <= r; ++beta) {
      bool all = true;
      for (int k = alpha - 1; k <= beta && all; ++k) all = inside(grid[k]);
      if (all) t.entry_ref(alpha, beta) = 1;
    }
  }
  return t;
}

RankTriangle rank_triangle(const UnramifiedBlock& block) {
  check_grid(block.grid);
  int r = static_cast<int>(block.grid.size()) - 1;
  RankTriangle t = RankTriangle::zero(r);
  for (const auto& [x, a] : block.summands) t = t + m_matrix(x, a, block.grid);
  return t;
}

int rank_entry_closed_form(HalfInt A, HalfInt B, HalfInt x, HalfInt y) {
  HalfInt v = A + B - max(x, B) - max(-y, B) + HalfInt::whole(1);
  if (!v.is_integer())
    fail(Errc::AssumptionViolated,
         "entry formula needs grid points in the summand's coset");
  return std::max(v.as_int(), 0);
}

std::map<SupercuspidalLabel, UnramifiedBlock> unramified_reduction(
    const LocalLParameter& phi) {
  std::map<SupercuspidalLabel, UnramifiedBlock> blocks;
  for (const auto& s : phi.summands) {
    if (!s.rho.self_dual())
      fail(Errc::AssumptionViolated,
           "label " + s.rho.name + " is not self-dual");
    blocks[s.rho].summands.emplace_back(s.x, s.a);
  }
  for (auto& [rho, block] : blocks) {
    std::sort(block.summands.begin(), block.summands.end());
    std::vector<HalfInt> grid;
    for (const auto& [x, a] : block.summands)
      for (int t = 0; t < a; ++t) grid.push_back(x + HalfInt::halves(a - 1 - 2 * t));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    size_t n = grid.size();
    for (size_t k = 0; k < n; ++k)
      if (grid[k] + grid[n - 1 - k] != HalfInt::whole(0))
        fail(Errc::AssumptionViolated,
             "exponent grid for " + rho.name + " is not symmetric about 0");
    for (size_t k = 1; k < n; ++k) {
      HalfInt gap = grid[k] - grid[k - 1];
      if (!gap.is_integer() || gap.as_int() < 1)
        fail(Errc::AssumptionViolated,
             "exponent grid for " + rho.name + " spans several cosets");
    }
    block.grid = std::move(grid);
  }
  return blocks;
}

std::pair<LocalLParameter, LocalLParameter> cancel_common(
    const LocalLParameter& a, const LocalLParameter& b) {
  LocalLParameter ra = a, rb = b;
  ra.canonicalize();
  rb.canonicalize();
  std::vector<LSummand> keep_a, keep_b;
  size_t ia = 0, ib = 0;
  while (ia < ra.summands.size() && ib < rb.summands.size()) {
    if (ra.summands[ia] == rb.summands[ib]) {
      ++ia;
      ++ib;
    } else if (ra.summands[ia] < rb.summands[ib]) {
      keep_a.push_back(ra.summands[ia++]);
    } else {
      keep_b.push_back(rb.summands[ib++]);
    }
  }
  for (; ia < ra.summands.size(); ++ia) keep_a.push_back(ra.summands[ia]);
  for (; ib < rb.summands.size(); ++ib) keep_b.push_back(rb.summands[ib]);
  ra.summands = std::move(keep_a);
  rb.summands = std::move(keep_b);
  return {std::move(ra), std::move(rb)};
}

OrderResult closure_compare(const LocalLParameter& a, const LocalLParameter& b) {
  if (a.group != b.group)
    fail(Errc::InfinitesimalMismatch, "parameters for different groups");
  if (infinitesimal_of(a) != infinitesimal_of(b))
    fail(Errc::InfinitesimalMismatch, "infinitesimal classes differ");
  auto [ra, rb] = cancel_common(a, b);
  if (ra.summands.empty() && rb.summands.empty()) return OrderResult::Equal;
  // Equal infinitesimal classes make the residual labels and their grids
  // agree; compute triangles over the joint grid of each label.
  std::map<SupercuspidalLabel, UnramifiedBlock> blocks_a =
      unramified_reduction(ra);
  std::map<SupercuspidalLabel, UnramifiedBlock> blocks_b =
      unramified_reduction(rb);
  bool ge = true, le = true;
  auto ita = blocks_a.begin();
  auto itb = blocks_b.begin();
  while (ita != blocks_a.end() || itb != blocks_b.end()) {
    if (ita == blocks_a.end() || itb == blocks_b.end() ||
        ita->first != itb->first)
      fail(Errc::InfinitesimalMismatch,
           "residual labels differ after cancellation");
    if (ita->second.grid != itb->second.grid)
      fail(Errc::InfinitesimalMismatch,
           "residual grids differ after cancellation");
    switch (triangle_compare(rank_triangle(ita->second),
                             rank_triangle(itb->second))) {
      case OrderResult::Greater: le = false; break;
      case OrderResult::Less: ge = false; break;
      case OrderResult::Equal: break;
      case OrderResult::Incomparable: ge = le = false; break;
    }
    ++ita;
    ++itb;
  }
  if (ge && le) return OrderResult::Equal;
  if (ge) return OrderResult::Greater;
  if (le) return OrderResult::Less;
  return OrderResult::Incomparable;
}

Partition partition_from_triangle(const RankTriangle& t, int n) {
  int r = t.r;
  // d[s] = sum of the s-th diagonal (s = 1..r); multiplicities come from the
  // backward recursion, with m[1] fixed by the total n.
  std::vector<long> d(r + 2, 0);
  for (int s = 1; s <= r; ++s)
    for (int k = 1; k <= r + 1 - s; ++k) d[s] += t.entry(k, k + s - 1);
  std::vector<long> m(r + 2, 0);
  if (r >= 1) m[r + 1] = d[r];
  for (int s = r; s >= 2; --s) {
    long acc = 0;
    for (int u = s + 1; u <= r + 1; ++u) acc += (u - s + 1) * m[u];
    m[s] = d[s - 1] - acc;
    if (m[s] < 0)
      fail(Errc::NegativeMultiplicity,
           "triangle is not of partition type at part " + std::to_string(s));
  }
  long used = 0;
  for (int s = 2; s <= r + 1; ++s) used += s * m[s];
  long m1 = n - used;
  if (m1 < 0)
    fail(Errc::NegativeMultiplicity,
         "triangle total exceeds " + std::to_string(n));
  std::vector<int> parts;
  for (int s = r + 1; s >= 2; --s)
    for (long c = 0; c < m[s]; ++c) parts.push_back(s);
  for (long c = 0; c < m1; ++c) parts.push_back(1);
  return Partition::of(std::move(parts));
}

}  // namespace arthurlab
