#include "arthurlab/rng.hpp"

#include <algorithm>
#include <cassert>

namespace arthurlab {

uint64_t Rng::next() {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int Rng::below(int n) {
  assert(n > 0);
  return static_cast<int>(next() % static_cast<uint64_t>(n));
}

int Rng::range(int lo, int hi) { return lo + below(hi - lo + 1); }

bool Rng::coin() { return (next() & 1) != 0; }

uint64_t mix_seed(uint64_t seed, uint64_t trial) {
  Rng r(seed + 0x9e3779b97f4a7c15ull * (trial + 1));
  return r.next();
}

namespace {

const std::vector<SupercuspidalLabel>& label_pool() {
  static const std::vector<SupercuspidalLabel> pool = {
      trivial_label(),
      {"c1", 1, SelfdualType::Symplectic, ""},
      {"u2", 2, SelfdualType::Symplectic, ""},
      {"w3", 3, SelfdualType::Orthogonal, ""},
  };
  return pool;
}

std::vector<SupercuspidalLabel> pick_labels(Rng& rng, int count) {
  std::vector<int> idx = {0, 1, 2, 3};
  for (int k = 3; k > 0; --k) std::swap(idx[k], idx[rng.below(k + 1)]);
  std::vector<SupercuspidalLabel> out;
  for (int k = 0; k < count; ++k) out.push_back(label_pool()[idx[k]]);
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest b >= 1 making (rho, a, b) good parity for the family.
int parity_base(GroupFamily family, const SupercuspidalLabel& rho, int a) {
  bool need_even =
      (family == GroupFamily::Sp) == (rho.type == SelfdualType::Orthogonal);
  bool a_odd = a % 2 == 1;
  return need_even == a_odd ? 1 : 2;
}

UnramifiedBlock random_block_core(Rng& rng, int coset, int count) {
  UnramifiedBlock block;
  for (int k = 0; k < count; ++k) {
    int a = rng.range(1, 5);
    int parity = (coset + a - 1) & 1;
    HalfInt x = HalfInt::halves(2 * rng.range(-3, 3) + parity);
    block.summands.emplace_back(x, a);
  }
  std::sort(block.summands.begin(), block.summands.end());
  std::vector<HalfInt> grid;
  for (const auto& [x, a] : block.summands)
    for (int t = 0; t < a; ++t) grid.push_back(x + HalfInt::halves(a - 1 - 2 * t));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  block.grid = std::move(grid);
  return block;
}

}  // namespace

LocalArthurParameter random_good_parameter(Rng& rng, GroupFamily family) {
  const int budget = 29;  // the parity filler may add one more dimension
  const SupercuspidalLabel filler_rho =
      family == GroupFamily::Sp
          ? trivial_label()
          : SupercuspidalLabel{"c1", 1, SelfdualType::Symplectic, ""};
  std::vector<SupercuspidalLabel> labels = pick_labels(rng, rng.range(1, 3));
  if (std::find(labels.begin(), labels.end(), filler_rho) == labels.end()) {
    if (labels.size() == 3) labels.pop_back();
    labels.push_back(filler_rho);
    std::sort(labels.begin(), labels.end());
  }
  std::vector<ArthurSummand> summands;
  int total = 0;
  int want = rng.range(1, 5);
  for (int k = 0; k < want; ++k) {
    const SupercuspidalLabel& rho = labels[rng.below(static_cast<int>(labels.size()))];
    int a = rng.range(1, 5);
    int b = parity_base(family, rho, a) + 2 * rng.below(3);
    if (total + rho.dim * a * b > budget) continue;
    summands.push_back(ArthurSummand{rho, a, b});
    total += rho.dim * a * b;
  }
  if (summands.empty()) {
    const SupercuspidalLabel& rho = labels[0];
    ArthurSummand s{rho, 1, parity_base(family, rho, 1)};
    total += s.dim();
    summands.push_back(s);
  }
  bool want_odd = family == GroupFamily::Sp;
  if (want_odd != (total % 2 == 1)) {
    // dim-1 good-parity filler of odd total dimension
    summands.push_back(ArthurSummand{filler_rho, 1, 1});
    total += 1;
  }
  return make_parameter(GroupSpec::for_dual_dim(family, total),
                        std::move(summands));
}

LocalArthurParameter random_good_parameter(Rng& rng) {
  return random_good_parameter(
      rng, rng.coin() ? GroupFamily::Sp : GroupFamily::SOOdd);
}

UnramifiedBlock random_unramified_block(Rng& rng) {
  return random_block_core(rng, rng.coin() ? 1 : 0, rng.range(1, 4));
}

std::pair<UnramifiedBlock, UnramifiedBlock> random_block_pair(Rng& rng) {
  int coset = rng.coin() ? 1 : 0;
  UnramifiedBlock first = random_block_core(rng, coset, rng.range(1, 4));
  int n = 0;
  for (const auto& [x, a] : first.summands) n += a;
  UnramifiedBlock second;
  second.grid = first.grid;
  int left = n;
  while (left > 0) {
    int a = rng.range(1, std::min(5, left));
    int parity = (coset + a - 1) & 1;
    HalfInt x = HalfInt::halves(2 * rng.range(-3, 3) + parity);
    second.summands.emplace_back(x, a);
    left -= a;
  }
  std::sort(second.summands.begin(), second.summands.end());
  return {std::move(first), std::move(second)};
}

ExtendedMultiSegment random_sorted_ems(Rng& rng, bool peelable) {
  GroupFamily family = rng.coin() ? GroupFamily::Sp : GroupFamily::SOOdd;
  std::vector<SupercuspidalLabel> labels = pick_labels(rng, rng.range(1, 2));
  std::vector<EmsBlock> blocks;
  for (const auto& rho : labels) {
    EmsBlock block{rho, {}};
    // Good parity per row means A (hence B) is an integer exactly when the
    // family/label combination asks for even a+b.
    bool need_even =
        (family == GroupFamily::Sp) == (rho.type == SelfdualType::Orthogonal);
    int coset = need_even ? 0 : 1;
    int count = rng.range(1, 4);
    std::vector<std::pair<int, int>> shapes;  // (twice B, width)
    for (int k = 0; k < count; ++k) {
      int t = 2 * rng.range(-2, 2) + coset;
      int wmin = std::max(1, 1 - t);
      shapes.emplace_back(t, wmin + rng.below(3));
    }
    std::sort(shapes.begin(), shapes.end());
    for (auto [t, w] : shapes) {
      HalfInt B = HalfInt::halves(t);
      HalfInt A = B + HalfInt::whole(w - 1);
      int lmax = w / 2;
      int lmin = peelable && w >= 2 ? 1 : 0;
      int l = rng.range(lmin, std::max(lmin, lmax));
      block.rows.push_back(
          make_extended_segment(A, B, l, rng.coin() ? 1 : -1));
    }
    blocks.push_back(std::move(block));
  }
  int total = 0;
  for (const auto& block : blocks)
    for (const auto& row : block.rows)
      total += block.rho.dim * row.a() * row.width();
  if ((family == GroupFamily::Sp) != (total % 2 == 1)) {
    // Reconcile the dual dimension parity with a good-parity point row.
    SupercuspidalLabel filler = family == GroupFamily::Sp
                                    ? trivial_label()
                                    : SupercuspidalLabel{
                                          "c1", 1, SelfdualType::Symplectic, ""};
    EmsBlock* home = nullptr;
    for (auto& block : blocks)
      if (block.rho == filler) home = &block;
    if (home == nullptr) {
      blocks.push_back(EmsBlock{filler, {}});
      home = &blocks.back();
    }
    ExtendedSegment point = make_extended_segment(HalfInt::whole(0),
                                                  HalfInt::whole(0), 0, 1);
    auto key = [](const ExtendedSegment& row) {
      return std::pair(row.B.twice, row.width());
    };
    auto at = home->rows.begin();
    while (at != home->rows.end() && key(*at) < key(point)) ++at;
    home->rows.insert(at, point);
    total += 1;
  }
  // The sign condition constrains the product over all rows; repair a -1
  // product in place. Flipping eta on an odd-width row flips the product, as
  // does moving l by one anywhere there is room. Width-2 rows pinned at l = 1
  // contribute +1, so a -1 product always leaves one of these openings.
  int sign = 1;
  for (const auto& block : blocks)
    for (const auto& row : block.rows) {
      int w = row.width();
      sign *= ((w / 2 + row.l) % 2 == 0 ? 1 : -1) * (w % 2 == 0 ? 1 : row.eta);
    }
  if (sign < 0) {
    bool fixed = false;
    for (auto& block : blocks) {
      for (auto& row : block.rows) {
        if (row.width() % 2 == 1) {
          row = make_extended_segment(row.A, row.B, row.l, -row.eta);
          fixed = true;
          break;
        }
      }
      if (fixed) break;
    }
    if (!fixed) {
      for (auto& block : blocks) {
        for (auto& row : block.rows) {
          int w = row.width();
          int lmin = peelable && w >= 2 ? 1 : 0;
          int next = 2 * (row.l + 1) <= w ? row.l + 1
                     : row.l - 1 >= lmin  ? row.l - 1
                                          : row.l;
          if (next != row.l) {
            row = make_extended_segment(row.A, row.B, next, row.eta);
            fixed = true;
            break;
          }
        }
        if (fixed) break;
      }
    }
  }
  return make_ems(GroupSpec::for_dual_dim(family, total), std::move(blocks));
}

LanglandsData random_langlands_data(Rng& rng) {
  std::vector<SupercuspidalLabel> labels = pick_labels(rng, rng.range(1, 2));
  std::vector<Segment> segments;
  int seg_count = rng.range(0, 4);
  for (int k = 0; k < seg_count; ++k) {
    if (!segments.empty() && rng.coin() && rng.coin()) {
      segments.push_back(segments[rng.below(static_cast<int>(segments.size()))]);
      continue;
    }
    const SupercuspidalLabel& rho = labels[rng.below(static_cast<int>(labels.size()))];
    int span = rng.range(0, 4);
    int parity = rng.coin() ? 1 : 0;
    int tmax = span - 1;
    if (((tmax % 2) + 2) % 2 != parity) --tmax;
    int xt = tmax - 2 * rng.below(4);
    HalfInt x = HalfInt::halves(xt);
    HalfInt y = HalfInt::whole(span) - x;
    segments.push_back(make_segment(rho, x, y));
  }
  std::vector<TemperedEntry> tempered;
  int temp_count = rng.range(0, 3);
  for (int k = 0; k < temp_count; ++k)
    tempered.push_back(
        TemperedEntry{labels[rng.below(static_cast<int>(labels.size()))],
                      rng.range(1, 6), rng.coin() ? 1 : -1});
  int dim = 0;
  for (const auto& s : segments) dim += 2 * s.dim();
  for (const auto& e : tempered) dim += e.rho.dim * e.a;
  GroupFamily family = dim % 2 == 1 ? GroupFamily::Sp : GroupFamily::SOOdd;
  return make_langlands_data(GroupSpec::for_dual_dim(family, dim),
                             std::move(segments), std::move(tempered));
}

}  // namespace arthurlab
