#include "arthurlab/ems.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "arthurlab/dsl.hpp"
#include "arthurlab/errors.hpp"

namespace arthurlab {

namespace {

HalfInt one() { return HalfInt::whole(1); }

void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

// add^{+1}/add^{-1}/shift on a raw row; returns nullopt for a row that
// shrinks away (width 0, l 0) and throws when the result is out of range.
std::optional<ExtendedSegment> surgery_row(const ExtendedSegment& row, int d,
                                           RowSurgery op) {
  HalfInt A = row.A, B = row.B;
  int l = row.l;
  if (op == RowSurgery::Shift) {
    A += HalfInt::whole(d);
    B += HalfInt::whole(d);
  } else {
    A += HalfInt::whole(d);
    B -= HalfInt::whole(d);
    l += d;
  }
  HalfInt width = A - B + one();
  if (!width.is_integer() || width.as_int() < 0)
    fail(Errc::InvariantBroken, "row " + row.str() + " shrinks below width 0");
  if (width.as_int() == 0) {
    if (l != 0)
      fail(Errc::InvariantBroken,
           "row " + row.str() + " vanishes with l = " + std::to_string(l));
    return std::nullopt;
  }
  return make_extended_segment(A, B, l, row.eta);
}

}  // namespace

int ExtendedSegment::width() const {
  HalfInt w = A - B + one();
  return w.is_integer() ? w.as_int() : -1;
}

int ExtendedSegment::a() const {
  HalfInt v = A + B + one();
  return v.is_integer() ? v.as_int() : -1;
}

ExtendedSegment ExtendedSegment::normalized() const {
  ExtendedSegment out = *this;
  if (2 * out.l == out.width()) out.eta = 1;
  return out;
}

std::string ExtendedSegment::str() const {
  return "([" + A.str() + "," + B.str() + "],l=" + std::to_string(l) + "," +
         (eta >= 0 ? "+" : "-") + ")";
}

ExtendedSegment make_extended_segment(HalfInt A, HalfInt B, int l, int eta) {
  HalfInt width = A - B + one();
  HalfInt asize = A + B + one();
  if (!width.is_integer() || width.as_int() < 1)
    fail(Errc::InvariantBroken,
         "segment [" + A.str() + "," + B.str() + "] has no positive width");
  if (!asize.is_integer() || asize.as_int() < 1)
    fail(Errc::InvariantBroken,
         "segment [" + A.str() + "," + B.str() + "] needs A + B >= 0");
  if (l < 0 || 2 * l > width.as_int())
    fail(Errc::InvariantBroken, "l = " + std::to_string(l) +
                                    " out of range for width " +
                                    std::to_string(width.as_int()));
  if (eta != 1 && eta != -1)
    fail(Errc::InvariantBroken, "eta must be +1 or -1");
  return ExtendedSegment{A, B, l, eta}.normalized();
}

const EmsBlock* ExtendedMultiSegment::find_block(
    const SupercuspidalLabel& rho) const {
  for (const auto& b : blocks)
    if (b.rho == rho) return &b;
  return nullptr;
}

EmsBlock* ExtendedMultiSegment::find_block(const SupercuspidalLabel& rho) {
  for (auto& b : blocks)
    if (b.rho == rho) return &b;
  return nullptr;
}

std::string ExtendedMultiSegment::str() const {
  std::string out = group.str() + " {";
  for (size_t k = 0; k < blocks.size(); ++k) {
    if (k) out += ";";
    out += " " + print_label(blocks[k].rho) + ":";
    for (const auto& row : blocks[k].rows) out += " " + row.str();
  }
  out += " }";
  return out;
}

ExtendedMultiSegment make_ems(GroupSpec group, std::vector<EmsBlock> blocks) {
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                              [](const EmsBlock& b) { return b.rows.empty(); }),
               blocks.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const EmsBlock& a, const EmsBlock& b) { return a.rho < b.rho; });
  for (size_t k = 1; k < blocks.size(); ++k)
    if (blocks[k].rho == blocks[k - 1].rho)
      fail(Errc::InvariantBroken,
           "duplicate block for label " + blocks[k].rho.name);
  for (auto& b : blocks)
    for (auto& row : b.rows) row = make_extended_segment(row.A, row.B, row.l, row.eta);
  return ExtendedMultiSegment{group, std::move(blocks)};
}

EmsValidation validate_ems(const ExtendedMultiSegment& ems) {
  EmsValidation v;
  long sign = 1;
  for (const auto& block : ems.blocks) {
    for (const auto& row : block.rows) {
      HalfInt width = row.A - row.B + one();
      HalfInt asize = row.A + row.B + one();
      bool ok = width.is_integer() && width.as_int() >= 1 &&
                asize.is_integer() && asize.as_int() >= 1 && row.l >= 0 &&
                2 * row.l <= width.as_int() && (row.eta == 1 || row.eta == -1);
      if (ok && 2 * row.l == width.as_int() && row.eta != 1) ok = false;
      if (!ok) {
        v.row_ranges_ok = false;
        v.notes.push_back("row " + row.str() + " in block " + block.rho.name +
                          " out of range");
        continue;
      }
      int b = width.as_int();
      int factor = ((b / 2 + row.l) % 2 == 0 ? 1 : -1) *
                   (b % 2 == 0 ? 1 : row.eta);
      sign *= factor;
    }
    for (size_t p = 0; p < block.rows.size(); ++p) {
      for (size_t q = p + 1; q < block.rows.size(); ++q) {
        if (block.rows[q].A < block.rows[p].A && block.rows[q].B < block.rows[p].B) {
          v.order_admissible = false;
          v.notes.push_back("rows " + std::to_string(p) + "," +
                            std::to_string(q) + " of block " + block.rho.name +
                            " are out of admissible order");
        }
        if (block.rows[q].B < block.rows[p].B) v.order_b_sorted = false;
      }
    }
  }
  v.sign = static_cast<int>(sign);
  v.sign_ok = sign == 1;
  if (!v.sign_ok)
    v.notes.push_back("sign condition fails (product = -1)");
  if (v.row_ranges_ok) {
    LocalArthurParameter psi = psi_of_ems(ems);
    ValidationReport rep = validate_parameter(psi);
    v.psi_good_parity = rep.all_good_parity;
    v.dimension_ok = rep.dimension_ok;
    for (const auto& note : rep.notes) v.notes.push_back(note);
    if (!rep.all_good_parity)
      v.notes.push_back("attached parameter has a bad-parity summand");
  }
  return v;
}

LocalArthurParameter psi_of_ems(const ExtendedMultiSegment& ems) {
  std::vector<ArthurSummand> summands;
  for (const auto& block : ems.blocks)
    for (const auto& row : block.rows)
      summands.push_back(ArthurSummand::from_AB(block.rho, row.A, row.B));
  return make_parameter(ems.group, std::move(summands));
}

ExtendedMultiSegment row_surgery(const ExtendedMultiSegment& ems,
                                 const SupercuspidalLabel& rho, int row, int d,
                                 RowSurgery op) {
  ExtendedMultiSegment out = ems;
  EmsBlock* block = out.find_block(rho);
  if (!block) fail(Errc::BadIndex, "no block for label " + rho.name);
  if (row < 0 || row >= static_cast<int>(block->rows.size()))
    fail(Errc::BadIndex, "row " + std::to_string(row) + " out of range");
  auto replaced = surgery_row(block->rows[row], d, op);
  if (replaced)
    block->rows[row] = *replaced;
  else
    block->rows.erase(block->rows.begin() + row);
  ExtendedMultiSegment rebuilt = make_ems(out.group, std::move(out.blocks));
  rebuilt.group =
      GroupSpec::for_dual_dim(ems.group.family, psi_dim_of(rebuilt));
  return rebuilt;
}

ExtendedMultiSegment block_surgery(const ExtendedMultiSegment& ems,
                                   const SupercuspidalLabel& rho, int d,
                                   RowSurgery op) {
  ExtendedMultiSegment out = ems;
  EmsBlock* block = out.find_block(rho);
  if (!block) fail(Errc::BadIndex, "no block for label " + rho.name);
  std::vector<ExtendedSegment> rows;
  for (const auto& row : block->rows)
    if (auto kept = surgery_row(row, d, op)) rows.push_back(*kept);
  block->rows = std::move(rows);
  ExtendedMultiSegment rebuilt = make_ems(out.group, std::move(out.blocks));
  rebuilt.group =
      GroupSpec::for_dual_dim(ems.group.family, psi_dim_of(rebuilt));
  return rebuilt;
}

int psi_dim_of(const ExtendedMultiSegment& ems) {
  int n = 0;
  for (const auto& block : ems.blocks)
    for (const auto& row : block.rows)
      n += block.rho.dim * row.a() * row.width();
  return n;
}

EMinusResult e_minus(const ExtendedMultiSegment& ems,
                     const SupercuspidalLabel& rho) {
  const EmsBlock* block = ems.find_block(rho);
  if (!block) fail(Errc::NoWideRow, "no block for label " + rho.name);
  for (size_t k = 1; k < block->rows.size(); ++k)
    if (block->rows[k].B < block->rows[k - 1].B)
      fail(Errc::PPrimeViolated, "block " + rho.name + " is not B-sorted");
  int bmax = 0;
  for (const auto& row : block->rows) bmax = std::max(bmax, row.width());
  if (bmax <= 1) fail(Errc::NoWideRow, "block " + rho.name + " has no wide row");
  size_t j1 = 0;
  while (block->rows[j1].width() != bmax) ++j1;
  HalfInt A = block->rows[j1].A, B = block->rows[j1].B;
  size_t end = j1;
  while (end < block->rows.size() && block->rows[end].A == A &&
         block->rows[end].B == B)
    ++end;
  for (size_t k = end; k < block->rows.size(); ++k)
    if (block->rows[k].B == B)
      fail(Errc::PPrimeViolated,
           "a narrower row follows the maximal run at B = " + B.str());
  int r = static_cast<int>(end - j1);
  ExtendedMultiSegment out = ems;
  EmsBlock* mblock = out.find_block(rho);
  std::vector<ExtendedSegment> rows;
  for (size_t k = 0; k < mblock->rows.size(); ++k) {
    if (k < j1 || k >= end) {
      rows.push_back(mblock->rows[k]);
      continue;
    }
    if (mblock->rows[k].l < 1)
      fail(Errc::InvariantBroken,
           "run row " + mblock->rows[k].str() + " has l = 0");
    if (auto kept = surgery_row(mblock->rows[k], -1, RowSurgery::Add))
      rows.push_back(*kept);
  }
  mblock->rows = std::move(rows);
  ExtendedMultiSegment rebuilt = make_ems(out.group, std::move(out.blocks));
  rebuilt.group = GroupSpec::for_dual_dim(ems.group.family, psi_dim_of(rebuilt));
  return EMinusResult{std::move(rebuilt), make_segment(rho, B, A), r};
}

ERhoMinusResult e_rho_minus(const ExtendedMultiSegment& ems,
                            const SupercuspidalLabel& rho) {
  const EmsBlock* block = ems.find_block(rho);
  if (!block) fail(Errc::NoWideRow, "no block for label " + rho.name);
  HalfInt bstar;
  bool found = false;
  for (const auto& row : block->rows) {
    if (row.width() < 2) continue;
    if (!found || row.B < bstar) {
      bstar = row.B;
      found = true;
    }
  }
  if (!found) fail(Errc::NoWideRow, "block " + rho.name + " has no wide row");
  ERhoMinusResult result;
  ExtendedMultiSegment out = ems;
  EmsBlock* mblock = out.find_block(rho);
  std::vector<ExtendedSegment> rows;
  for (const auto& row : mblock->rows) {
    if (row.B < bstar && row.width() != 1)
      fail(Errc::DecompositionFailed,
           "wide row " + row.str() + " below B = " + bstar.str());
    bool in_i2 = row.B == bstar && row.width() >= 2;
    if (!in_i2) {
      rows.push_back(row);
      continue;
    }
    if (row.l < 1)
      fail(Errc::LZero, "row " + row.str() + " has l = 0 at B = " + bstar.str());
    result.removed.push_back(make_segment(rho, bstar, row.A));
    if (auto kept = surgery_row(row, -1, RowSurgery::Add)) rows.push_back(*kept);
  }
  mblock->rows = std::move(rows);
  ExtendedMultiSegment rebuilt = make_ems(out.group, std::move(out.blocks));
  rebuilt.group = GroupSpec::for_dual_dim(ems.group.family, psi_dim_of(rebuilt));
  EmsValidation v = validate_ems(rebuilt);
  if (!v.row_ranges_ok || !v.order_admissible)
    fail(Errc::DecompositionFailed, "peeled block is no longer admissible");
  result.ems = std::move(rebuilt);
  std::sort(result.removed.begin(), result.removed.end());
  return result;
}

EPlusUpperResult e_plus_upper(const ExtendedMultiSegment& ems,
                              const SupercuspidalLabel& rho, HalfInt x,
                              HalfInt y, int r) {
  if (r < 0) fail(Errc::HypothesisFailed, "negative multiplicity");
  if (r == 0) return EPlusUpperResult{ems, false};
  HalfInt gap = y - x - one();
  require(gap.is_integer() && gap.as_int() >= 0, Errc::HypothesisFailed,
          "segment [" + x.str() + "," + y.str() + "] has negative width");
  ExtendedMultiSegment out = ems;
  if (gap.as_int() == 0) {
    require(y >= HalfInt::whole(0), Errc::HypothesisFailed,
            "insert needs y >= 0, got " + y.str());
    const EmsBlock* block = out.find_block(rho);
    if (block) {
      for (const auto& row : block->rows) {
        require((y - row.A).is_integer(), Errc::HypothesisFailed,
                "y = " + y.str() + " lies outside the block's coset");
        require(row.width() <= 2, Errc::HypothesisFailed,
                "insert needs all widths <= 2, found " + row.str());
        require(!(row.B <= x) || row.A == row.B, Errc::HypothesisFailed,
                "non-point row " + row.str() + " below x = " + x.str());
      }
      LocalArthurParameter psi = psi_of_ems(ems);
      HalfInt two_y = y + y;
      for (const auto& s : psi.summands)
        require(!(s.rho == rho && HalfInt::whole(s.a) == two_y && s.b == 2),
                Errc::HypothesisFailed,
                "parameter already contains the inserted type");
    }
    ExtendedSegment fresh = make_extended_segment(y, x, 1, 1);
    EmsBlock* mblock = out.find_block(rho);
    if (!mblock) {
      out.blocks.push_back(EmsBlock{rho, {}});
      mblock = &out.blocks.back();
    }
    size_t pos = 0;
    while (pos < mblock->rows.size() && !(x < mblock->rows[pos].B)) ++pos;
    mblock->rows.insert(mblock->rows.begin() + pos, r, fresh);
  } else {
    EmsBlock* mblock = out.find_block(rho);
    require(mblock != nullptr, Errc::HypothesisFailed,
            "no block for label " + rho.name);
    HalfInt tA = y - one(), tB = x + one();
    size_t j1 = 0;
    while (j1 < mblock->rows.size() && mblock->rows[j1].B != tB) ++j1;
    require(j1 < mblock->rows.size(), Errc::HypothesisFailed,
            "no row with B = " + tB.str());
    require(mblock->rows[j1].A == tA, Errc::HypothesisFailed,
            "first row at B = " + tB.str() + " is " + mblock->rows[j1].str() +
                ", not [" + tA.str() + "," + tB.str() + "]");
    require(j1 + r <= mblock->rows.size(), Errc::HypothesisFailed,
            "fewer than " + std::to_string(r) + " rows at the target");
    for (size_t k = j1; k < j1 + static_cast<size_t>(r); ++k)
      require(mblock->rows[k].A == tA && mblock->rows[k].B == tB,
              Errc::HypothesisFailed,
              "row " + mblock->rows[k].str() + " breaks the target run");
    int wj = mblock->rows[j1].width();
    for (size_t k = 0; k < mblock->rows.size(); ++k) {
      int wk = mblock->rows[k].width();
      if (k < j1)
        require(wj + 2 > wk, Errc::HypothesisFailed,
                "row " + mblock->rows[k].str() + " before the run is too wide");
      else
        require(wj + 2 >= wk, Errc::HypothesisFailed,
                "row " + mblock->rows[k].str() + " is too wide for the widening");
    }
    for (size_t k = j1; k < j1 + static_cast<size_t>(r); ++k)
      mblock->rows[k] = *surgery_row(mblock->rows[k], 1, RowSurgery::Add);
  }
  ExtendedMultiSegment rebuilt = make_ems(out.group, std::move(out.blocks));
  rebuilt.group = GroupSpec::for_dual_dim(ems.group.family, psi_dim_of(rebuilt));
  EmsValidation v = validate_ems(rebuilt);
  if (!v.row_ranges_ok || !v.order_admissible)
    fail(Errc::HypothesisFailed, "result is no longer admissible");
  return EPlusUpperResult{std::move(rebuilt), gap.as_int() > 0};
}

ExtendedMultiSegment e_plus_lower(const ExtendedMultiSegment& ems,
                                  const SupercuspidalLabel& rho,
                                  const std::vector<Segment>& removed) {
  if (removed.empty()) return ems;
  HalfInt x = removed.front().x;
  int m = 0;
  std::multiset<HalfInt> target_A;
  for (const auto& seg : removed) {
    require(seg.rho == rho, Errc::HypothesisFailed,
            "removed segment has label " + seg.rho.name + ", expected " +
                rho.name);
    require(seg.x == x, Errc::HypothesisFailed,
            "removed segments must share x (" + seg.x.str() + " vs " + x.str() +
                ")");
    require(seg.x < seg.y, Errc::HypothesisFailed,
            "segment " + seg.str() + " is not strictly negative");
    if (seg.y == x + one())
      ++m;
    else
      target_A.insert(seg.y - one());
  }
  ExtendedMultiSegment out = ems;
  EmsBlock* mblock = out.find_block(rho);
  if (!mblock && !removed.empty()) {
    out.blocks.push_back(EmsBlock{rho, {}});
    mblock = out.find_block(rho);
  }
  std::vector<ExtendedSegment> i1, widened, i3;
  for (const auto& row : mblock->rows) {
    if (row.B <= x) {
      require(row.A == row.B, Errc::DecompositionFailed,
              "wide row " + row.str() + " at or below x = " + x.str());
      i1.push_back(row);
      continue;
    }
    auto hit = row.B == x + one() ? target_A.find(row.A) : target_A.end();
    if (hit != target_A.end()) {
      target_A.erase(hit);
      widened.push_back(*surgery_row(row, 1, RowSurgery::Add));
    } else {
      i3.push_back(row);
    }
  }
  if (!target_A.empty())
    fail(Errc::DecompositionFailed,
         "no row [" + (target_A.begin()->str()) + "," + (x + one()).str() +
             "] to widen");
  std::vector<ExtendedSegment> rows = std::move(i1);
  if (m > 0) {
    ExtendedSegment fresh = make_extended_segment(x + one(), x, 1, 1);
    rows.insert(rows.end(), m, fresh);
  }
  rows.insert(rows.end(), widened.begin(), widened.end());
  rows.insert(rows.end(), i3.begin(), i3.end());
  mblock->rows = std::move(rows);
  ExtendedMultiSegment rebuilt = make_ems(out.group, std::move(out.blocks));
  rebuilt.group = GroupSpec::for_dual_dim(ems.group.family, psi_dim_of(rebuilt));
  EmsValidation v = validate_ems(rebuilt);
  if (!v.row_ranges_ok || !v.order_admissible)
    fail(Errc::DecompositionFailed, "result is no longer admissible");
  return rebuilt;
}

ExtendedMultiSegment dual_tempered_ems(const ExtendedMultiSegment& ems) {
  ExtendedMultiSegment out = ems;
  for (auto& block : out.blocks) {
    std::vector<ExtendedSegment> rows;
    for (const auto& row : block.rows) {
      if (row.A != row.B || row.l != 0 || row.eta != 1)
        fail(Errc::NotTemperedAllPlus,
             "row " + row.str() + " is not a plus point row");
      rows.push_back(make_extended_segment(row.A, -row.A, row.A.ceil(), 1));
    }
    std::reverse(rows.begin(), rows.end());
    block.rows = std::move(rows);
  }
  return make_ems(out.group, std::move(out.blocks));
}

}  // namespace arthurlab
