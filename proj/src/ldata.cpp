#include "arthurlab/ldata.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arthurlab/dsl.hpp"
#include "arthurlab/errors.hpp"

namespace arthurlab {

namespace {

// Canonical segment order: most negative center first, then label, then x.
bool seg_less(const Segment& p, const Segment& q) {
  if (auto c = (p.x - p.y) <=> (q.x - q.y); c != 0) return c < 0;
  if (auto c = p.rho <=> q.rho; c != 0) return c < 0;
  return p.x < q.x;
}

std::string tempered_entry_str(const TemperedEntry& e) {
  return print_label(e.rho) + "[" + HalfInt::halves(e.a - 1).str() + "]" +
         (e.sign > 0 ? "+" : "-");
}

void check_segment(const Segment& s) {
  HalfInt span = s.x + s.y;
  if (s.rho.dim < 1 || !span.is_integer() || span.as_int() < 0)
    fail(Errc::InvariantBroken,
         "bad segment endpoints [" + s.x.str() + "," + (-s.y).str() + "]");
}

GroupSpec regroup(const LanglandsData& pi) {
  return GroupSpec::for_dual_dim(pi.group.family, pi.dim());
}

std::string summand_str(const SupercuspidalLabel& rho, int a, int b) {
  return print_label(rho) + " (x) S_" + std::to_string(a) + " (x) S_" +
         std::to_string(b);
}

}  // namespace

int Segment::length() const { return (x + y).as_int() + 1; }

int Segment::dim() const { return rho.dim * length(); }

std::string Segment::str() const {
  return "D(" + print_label(rho) + ")[" + x.str() + "," + (-y).str() + "]";
}

Segment make_segment(const SupercuspidalLabel& rho, HalfInt x, HalfInt y) {
  Segment s{rho, x, y};
  check_segment(s);
  return s;
}

int LanglandsData::dim() const {
  int n = 0;
  for (const auto& s : segments) n += 2 * s.dim();
  for (const auto& e : tempered) n += e.rho.dim * e.a;
  return n;
}

void LanglandsData::canonicalize() {
  std::sort(segments.begin(), segments.end(), seg_less);
  std::sort(tempered.begin(), tempered.end());
}

std::string LanglandsData::str() const {
  std::string out = "L(";
  for (size_t i = 0; i < segments.size(); ++i) {
    if (i) out += ", ";
    out += segments[i].str();
  }
  out += "; pi(";
  for (size_t i = 0; i < tempered.size(); ++i) {
    if (i) out += ", ";
    out += tempered_entry_str(tempered[i]);
  }
  out += "))";
  return out;
}

LanglandsData make_langlands_data(GroupSpec group, std::vector<Segment> segments,
                                  std::vector<TemperedEntry> tempered) {
  for (const auto& s : segments) {
    check_segment(s);
    if (!(s.x < s.y))
      fail(Errc::InvariantBroken, "segment " + s.str() + " is not negative");
  }
  for (const auto& e : tempered)
    if (e.a < 1 || e.rho.dim < 1 || (e.sign != 1 && e.sign != -1))
      fail(Errc::InvariantBroken, "bad tempered entry " + tempered_entry_str(e));
  LanglandsData pi{group, std::move(segments), std::move(tempered)};
  pi.canonicalize();
  return pi;
}

LanglandsData insert_segments(const LanglandsData& pi,
                              const std::vector<Segment>& segs) {
  LanglandsData out = pi;
  for (const auto& s : segs) {
    check_segment(s);
    if (!(s.x < s.y))
      fail(Errc::InvariantBroken, "segment " + s.str() + " is not negative");
    out.segments.push_back(s);
  }
  out.canonicalize();
  out.group = regroup(out);
  return out;
}

LanglandsData remove_segments(const LanglandsData& pi,
                              const std::vector<Segment>& segs) {
  LanglandsData out = pi;
  for (const auto& s : segs) {
    auto it = std::find(out.segments.begin(), out.segments.end(), s);
    if (it == out.segments.end())
      fail(Errc::InvariantBroken, "no segment " + s.str() + " to remove");
    out.segments.erase(it);
  }
  out.group = regroup(out);
  return out;
}

ReduceUpperResult reduce_upper(const LanglandsData& pi) {
  if (pi.segments.empty())
    fail(Errc::Tempered, "datum has no segment to strip");
  LanglandsData sorted = pi;
  sorted.canonicalize();
  Segment front = sorted.segments[0];
  int r = 0;
  while (r < static_cast<int>(sorted.segments.size()) &&
         sorted.segments[r] == front)
    ++r;
  ReduceUpperResult res{sorted, front.rho, front.x, front.y, r};
  res.pi_minus.segments.erase(res.pi_minus.segments.begin(),
                              res.pi_minus.segments.begin() + r);
  res.pi_minus.group = regroup(res.pi_minus);
  return res;
}

ReduceLowerResult reduce_lower(const LanglandsData& pi) {
  if (pi.segments.empty())
    fail(Errc::Tempered, "datum has no segment to strip");
  const Segment* least = &pi.segments[0];
  for (const auto& s : pi.segments)
    if (s.rho < least->rho) least = &s;
  SupercuspidalLabel rho = least->rho;
  HalfInt x_min = least->x;
  for (const auto& s : pi.segments)
    if (s.rho == rho && s.x < x_min) x_min = s.x;

  ReduceLowerResult res{pi, {}, rho, x_min};
  auto& segs = res.pi_minus.segments;
  for (auto it = segs.begin(); it != segs.end();) {
    if (it->rho == rho && it->x == x_min) {
      res.removed.push_back(*it);
      it = segs.erase(it);
    } else {
      ++it;
    }
  }
  std::sort(res.removed.begin(), res.removed.end(), seg_less);
  res.pi_minus.canonicalize();
  res.pi_minus.group = regroup(res.pi_minus);
  return res;
}

MaxBReport max_b_check(const LanglandsData& pi, const LocalArthurParameter& psi) {
  std::set<SupercuspidalLabel> labels;
  for (const auto& s : pi.segments) labels.insert(s.rho);
  for (const auto& s : psi.summands) labels.insert(s.rho);

  MaxBReport rep{true, true};
  for (const auto& rho : labels) {
    int max_b = 0;
    for (const auto& s : psi.summands)
      if (s.rho == rho) max_b = std::max(max_b, s.b);
    HalfInt floor_needed = HalfInt::whole(0);
    for (const auto& s : pi.segments)
      if (s.rho == rho) floor_needed = min(floor_needed, s.x - s.y);
    HalfInt lhs = HalfInt::whole(1 - max_b);
    if (!(lhs <= floor_needed)) rep.ok = false;
    if (lhs != floor_needed) rep.equality = false;
  }
  rep.equality = rep.equality && rep.ok;
  return rep;
}

PredicateResult predicate_upper(const LocalArthurParameter& psi,
                                const SupercuspidalLabel& rho, HalfInt x,
                                HalfInt y, int r) {
  HalfInt span = x + y;
  HalfInt gap = y - x - HalfInt::whole(1);
  if (!span.is_integer() || span.as_int() < 0 || !gap.is_integer() ||
      gap.as_int() < 0 || r < 1)
    fail(Errc::InvariantBroken, "bad re-attachment data [" + x.str() + "," +
                                    (-y).str() + "] x " + std::to_string(r));
  int a_val = span.as_int() + 1;
  int b_narrow = gap.as_int();
  int b_wide = b_narrow + 2;

  PredicateResult res;
  if (b_narrow > 0) {
    ArthurSummand narrow{rho, a_val, b_narrow};
    int have = static_cast<int>(
        std::count(psi.summands.begin(), psi.summands.end(), narrow));
    if (have < r) {
      res.failed = "fewer than " + std::to_string(r) + " copies of " +
                   summand_str(rho, a_val, b_narrow);
      return res;
    }
  }
  for (const auto& s : psi.summands) {
    if (s.rho != rho) continue;
    if (s.b > b_wide) {
      res.failed = summand_str(rho, s.a, s.b) + " is wider than S_" +
                   std::to_string(b_wide);
      return res;
    }
    if (s.b == b_wide && s.a <= a_val) {
      res.failed = summand_str(rho, s.a, s.b) + " has full width but a <= " +
                   std::to_string(a_val);
      return res;
    }
  }

  res.ok = true;
  res.psi_plus = psi;
  auto& out = res.psi_plus.summands;
  if (b_narrow > 0) {
    ArthurSummand narrow{rho, a_val, b_narrow};
    for (int k = 0; k < r; ++k)
      out.erase(std::find(out.begin(), out.end(), narrow));
  }
  for (int k = 0; k < r; ++k) out.push_back(ArthurSummand{rho, a_val, b_wide});
  res.psi_plus.canonicalize();
  res.psi_plus.group =
      GroupSpec::for_dual_dim(psi.group.family, res.psi_plus.dim());
  return res;
}

PredicateResult predicate_lower(const LocalArthurParameter& psi,
                                const std::vector<Segment>& removed,
                                HalfInt x_min) {
  if (removed.empty()) {
    PredicateResult res;
    res.ok = true;
    res.psi_plus = psi;
    res.psi_plus.canonicalize();
    return res;
  }
  const SupercuspidalLabel& rho = removed[0].rho;
  for (const auto& s : removed) {
    check_segment(s);
    if (!(s.x < s.y))
      fail(Errc::InvariantBroken, "segment " + s.str() + " is not negative");
    if (s.rho != rho || s.x != x_min)
      fail(Errc::InvariantBroken,
           "removed segments must share one label and x = " + x_min.str());
  }

  PredicateResult res;
  std::map<ArthurSummand, int> narrow_needed;
  for (const auto& s : removed) {
    HalfInt gap = s.y - s.x - HalfInt::whole(1);
    if (gap.as_int() > 0)
      ++narrow_needed[ArthurSummand{rho, (s.x + s.y).as_int() + 1,
                                    gap.as_int()}];
  }
  for (const auto& [narrow, needed] : narrow_needed) {
    int have = static_cast<int>(
        std::count(psi.summands.begin(), psi.summands.end(), narrow));
    if (have < needed) {
      res.failed = "fewer than " + std::to_string(needed) + " copies of " +
                   summand_str(narrow.rho, narrow.a, narrow.b);
      return res;
    }
  }
  for (const auto& s : psi.summands) {
    if (s.rho != rho) continue;
    if (HalfInt::whole(s.a - s.b) <= x_min + x_min && s.b != 1) {
      res.failed = summand_str(rho, s.a, s.b) + " starts at or below " +
                   x_min.str() + " but is not tempered-shaped";
      return res;
    }
  }

  res.ok = true;
  res.psi_plus = psi;
  auto& out = res.psi_plus.summands;
  for (const auto& [narrow, needed] : narrow_needed)
    for (int k = 0; k < needed; ++k)
      out.erase(std::find(out.begin(), out.end(), narrow));
  for (const auto& s : removed)
    out.push_back(ArthurSummand{rho, (s.x + s.y).as_int() + 1,
                                (s.y - s.x + HalfInt::whole(1)).as_int()});
  res.psi_plus.canonicalize();
  res.psi_plus.group =
      GroupSpec::for_dual_dim(psi.group.family, res.psi_plus.dim());
  return res;
}

ExtendedMultiSegment tempered_ems_of(const LanglandsData& pi) {
  if (!pi.segments.empty())
    fail(Errc::Tempered, "datum still carries segments");
  std::map<SupercuspidalLabel, std::vector<ExtendedSegment>> rows;
  LanglandsData sorted = pi;
  sorted.canonicalize();
  for (const auto& e : sorted.tempered) {
    HalfInt edge = HalfInt::halves(e.a - 1);
    rows[e.rho].push_back(ExtendedSegment{edge, edge, 0, e.sign});
  }
  std::vector<EmsBlock> blocks;
  for (auto& [rho, list] : rows) blocks.push_back(EmsBlock{rho, std::move(list)});
  return make_ems(pi.group, std::move(blocks));
}

}  // namespace arthurlab
