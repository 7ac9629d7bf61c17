#include "arthurlab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

#include "arthurlab/dot.hpp"
#include "arthurlab/dsl.hpp"
#include "arthurlab/errors.hpp"
#include "arthurlab/json_io.hpp"
#include "arthurlab/operators.hpp"
#include "arthurlab/orders.hpp"
#include "arthurlab/rng.hpp"

namespace arthurlab {
namespace {

int count_summand(const LocalArthurParameter& psi, const ArthurSummand& s) {
  return static_cast<int>(
      std::count(psi.summands.begin(), psi.summands.end(), s));
}

bool weakly_greater(OrderResult r) {
  return r == OrderResult::Greater || r == OrderResult::Equal;
}

std::string sandwich_core(Rng& rng) {
  LocalArthurParameter psi = random_good_parameter(rng);
  LambdaExtremes ext = extremal_parameters_of_lambda(psi);
  std::string tag = "psi = " + print_parameter(psi);
  OrderResult above = closure_compare(phi_of(ext.open), phi_of(psi));
  if (!weakly_greater(above))
    return tag + " | open parameter " + print_parameter(ext.open) +
           " is not closure-above, got " +
           std::string(order_result_name(above));
  OrderResult below = closure_compare(phi_of(psi), phi_of(ext.zero));
  if (!weakly_greater(below))
    return tag + " | zero parameter " + print_parameter(ext.zero) +
           " is not closure-below, got " +
           std::string(order_result_name(below));
  return {};
}

// Bullet-by-bullet re-evaluation of the upper re-attachment requirements,
// written against the documented contract rather than the implementation.
bool oracle_upper(const LocalArthurParameter& psi, const SupercuspidalLabel& rho,
                  HalfInt x, HalfInt y, int r, LocalArthurParameter* plus) {
  int a_val = (x + y).as_int() + 1;
  int b_narrow = (y - x - HalfInt::whole(1)).as_int();
  if (b_narrow > 0 &&
      count_summand(psi, ArthurSummand{rho, a_val, b_narrow}) < r)
    return false;
  for (const ArthurSummand& s : psi.summands) {
    if (s.rho != rho) continue;
    if (s.b > b_narrow + 2) return false;
    if (s.b == b_narrow + 2 && s.a <= a_val) return false;
  }
  std::vector<ArthurSummand> out = psi.summands;
  if (b_narrow > 0) {
    ArthurSummand narrow{rho, a_val, b_narrow};
    for (int k = 0; k < r; ++k)
      out.erase(std::find(out.begin(), out.end(), narrow));
  }
  for (int k = 0; k < r; ++k) out.push_back(ArthurSummand{rho, a_val, b_narrow + 2});
  int total = 0;
  for (const ArthurSummand& s : out) total += s.dim();
  *plus = make_parameter(GroupSpec::for_dual_dim(psi.group.family, total),
                         std::move(out));
  return true;
}

bool oracle_lower(const LocalArthurParameter& psi,
                  const std::vector<Segment>& removed, HalfInt x_min,
                  LocalArthurParameter* plus) {
  if (removed.empty()) {
    *plus = psi;
    plus->canonicalize();
    return true;
  }
  const SupercuspidalLabel& rho = removed[0].rho;
  std::map<ArthurSummand, int> needed;
  for (const Segment& s : removed) {
    int b_narrow = (s.y - s.x - HalfInt::whole(1)).as_int();
    if (b_narrow > 0)
      ++needed[ArthurSummand{rho, (s.x + s.y).as_int() + 1, b_narrow}];
  }
  for (const auto& [narrow, want] : needed)
    if (count_summand(psi, narrow) < want) return false;
  for (const ArthurSummand& s : psi.summands)
    if (s.rho == rho && HalfInt::whole(s.a - s.b) <= x_min + x_min && s.b != 1)
      return false;
  std::vector<ArthurSummand> out = psi.summands;
  for (const auto& [narrow, want] : needed)
    for (int k = 0; k < want; ++k)
      out.erase(std::find(out.begin(), out.end(), narrow));
  for (const Segment& s : removed)
    out.push_back(ArthurSummand{rho, (s.x + s.y).as_int() + 1,
                                (s.y - s.x + HalfInt::whole(1)).as_int()});
  int total = 0;
  for (const ArthurSummand& s : out) total += s.dim();
  *plus = make_parameter(GroupSpec::for_dual_dim(psi.group.family, total),
                         std::move(out));
  return true;
}

}  // namespace

std::string monotonicity_trial(uint64_t trial_seed) {
  Rng rng(trial_seed);
  LocalArthurParameter psi = random_good_parameter(rng);
  InfinitesimalClass lambda = infinitesimal_of(psi);
  for (const RaisingMove& move : enumerate_raising(psi)) {
    std::string tag = "psi = " + print_parameter(psi) + " | move = " +
                      move.op.str() + " | result = " +
                      print_parameter(move.result);
    if (move.result.group != psi.group) return tag + " | group changed";
    if (move.result.dim() != psi.dim()) return tag + " | dimension changed";
    if (!(infinitesimal_of(move.result) == lambda))
      return tag + " | infinitesimal class changed";
    OrderResult ra = compare(move.result, psi, OrderKind::A);
    bool same = move.result == psi;
    if (!(ra == OrderResult::Greater || (same && ra == OrderResult::Equal)))
      return tag + " | A-comparison gave " +
             std::string(order_result_name(ra));
    OrderResult rd = compare(move.result, psi, OrderKind::D);
    if (!weakly_greater(rd))
      return tag + " | D-comparison gave " +
             std::string(order_result_name(rd));
    OrderResult rc = compare(move.result, psi, OrderKind::C);
    if (!weakly_greater(rc))
      return tag + " | C-comparison gave " +
             std::string(order_result_name(rc));
  }
  return {};
}

std::string duality_trial(uint64_t trial_seed) {
  Rng rng(trial_seed);
  LocalArthurParameter psi = random_good_parameter(rng);
  LocalArthurParameter dpsi = dual_psi(psi);
  std::string tag = "psi = " + print_parameter(psi);
  if (!(dual_psi(dpsi) == psi)) return tag + " | dual is not an involution";
  if (dpsi.group != psi.group || dpsi.dim() != psi.dim())
    return tag + " | dual changed the group";
  PartitionPair mine = partitions_of(psi);
  PartitionPair theirs = partitions_of(dpsi);
  if (!(mine.pD == theirs.pA) || !(mine.pA == theirs.pD))
    return tag + " | partition pair does not swap under duality";
  const OperatorKind raising[] = {OperatorKind::UiInverse,
                                  OperatorKind::DualUiDual,
                                  OperatorKind::DualMinus};
  for (OperatorKind kind : raising) {
    for (const RaisingMove& move : enumerate_raising_of_kind(psi, kind)) {
      std::string where = tag + " | move = " + move.op.str();
      OperatorDescriptor flip = dual_transport(move.op);
      OperatorDescriptor back = dual_transport(flip);
      if (back.kind != move.op.kind || back.rho != move.op.rho ||
          back.i != move.op.i || back.j != move.op.j)
        return where + " | kind-level transport is not an involution";
      OperatorDescriptor moved = dual_transport(move.op, psi);
      ApplyResult lower = apply(dual_psi(move.result), moved);
      if (!lower.changed)
        return where + " | transported move " + moved.str() +
               " does not apply on the dual side";
      if (!(lower.parameter == dpsi))
        return where + " | transported move " + moved.str() + " gave " +
               print_parameter(lower.parameter) + " instead of " +
               print_parameter(dpsi);
    }
  }
  return {};
}

std::string partition_triangle_trial(uint64_t trial_seed) {
  Rng rng(trial_seed);
  {
    // Single summand: implementation triangle, closed form, and the direct
    // count over copies must agree on every window of the (possibly padded)
    // exponent grid.
    int a = rng.range(1, 5);
    int b = rng.range(1, 5);
    HalfInt A = HalfInt::halves(a + b - 2);
    HalfInt B = HalfInt::halves(a - b);
    int pad_lo = rng.below(3);
    int pad_hi = rng.below(3);
    std::vector<HalfInt> grid;
    HalfInt at = -A - HalfInt::whole(pad_lo);
    int points = (a + b - 1) + pad_lo + pad_hi;
    for (int k = 0; k < points; ++k) grid.push_back(at + HalfInt::whole(k));
    UnramifiedBlock block;
    block.grid = grid;
    for (int t = 0; t < b; ++t)
      block.summands.emplace_back(HalfInt::halves(b - 1 - 2 * t), a);
    std::sort(block.summands.begin(), block.summands.end());
    RankTriangle tri = rank_triangle(block);
    std::vector<RankTriangle> mats;
    for (const auto& [xv, av] : block.summands)
      mats.push_back(m_matrix(xv, av, grid));
    int r = points - 1;
    for (int al = 1; al <= r; ++al) {
      for (int be = al; be <= r; ++be) {
        HalfInt y = grid[al - 1];
        HalfInt x = grid[be];
        int closed = rank_entry_closed_form(A, B, x, y);
        int direct = 0;
        for (int t = 0; t < b; ++t)
          if (A - HalfInt::whole(t) >= x && -B - HalfInt::whole(t) <= y)
            ++direct;
        int msum = 0;
        for (const RankTriangle& m : mats) msum += m.entry(al, be);
        if (closed != direct || direct != msum || msum != tri.entry(al, be))
          return "summand a=" + std::to_string(a) + " b=" + std::to_string(b) +
                 " window (" + y.str() + "," + x.str() + ")" +
                 " | closed=" + std::to_string(closed) +
                 " direct=" + std::to_string(direct) +
                 " matrix-sum=" + std::to_string(msum) +
                 " triangle=" + std::to_string(tri.entry(al, be));
      }
    }
  }
  {
    // Recovering the sizes from the triangle of a block over its own grid.
    UnramifiedBlock block = random_unramified_block(rng);
    std::vector<int> sizes;
    int n = 0;
    for (const auto& [xv, av] : block.summands) {
      sizes.push_back(av);
      n += av;
    }
    Partition want = Partition::of(std::move(sizes));
    Partition got = partition_from_triangle(rank_triangle(block), n);
    if (!(got == want))
      return "block triangle " + rank_triangle(block).str() +
             " recovered " + got.str() + " instead of " + want.str();
  }
  {
    // Entrywise triangle comparison must refine dominance of the recovered
    // partitions for blocks sharing a grid and a total size.
    auto [first, second] = random_block_pair(rng);
    int n = 0;
    for (const auto& [xv, av] : first.summands) n += av;
    RankTriangle t1 = rank_triangle(first);
    RankTriangle t2 = rank_triangle(second);
    OrderResult tri = triangle_compare(t1, t2);
    if (tri != OrderResult::Incomparable) {
      Partition p1 = partition_from_triangle(t1, n);
      Partition p2 = partition_from_triangle(t2, n);
      OrderResult dom = dominance_compare(p1, p2);
      if (dom != tri)
        return "triangles " + t1.str() + " vs " + t2.str() + " compare " +
               std::string(order_result_name(tri)) + " but partitions " +
               p1.str() + " vs " + p2.str() + " compare " +
               std::string(order_result_name(dom));
    }
  }
  return sandwich_core(rng);
}

std::string sandwich_trial(uint64_t trial_seed) {
  Rng rng(trial_seed);
  return sandwich_core(rng);
}

std::string ems_chain_trial(uint64_t trial_seed) {
  Rng rng(trial_seed);
  ExtendedMultiSegment ems = random_sorted_ems(rng, true);
  std::string tag = "E = " + ems.str();
  EmsValidation v = validate_ems(ems);
  if (!v.ok() || !v.order_b_sorted)
    return tag + " | generator output failed validation";
  LocalArthurParameter psi = psi_of_ems(ems);
  for (const EmsBlock& block : ems.blocks) {
    bool wide = false;
    for (const ExtendedSegment& row : block.rows) wide |= row.width() >= 2;
    if (!wide) continue;
    const SupercuspidalLabel& rho = block.rho;

    EMinusResult down = e_minus(ems, rho);
    EmsValidation vd = validate_ems(down.ems);
    if (!vd.ok()) return tag + " | e_minus output failed validation";
    if (vd.sign != v.sign) return tag + " | e_minus changed the sign";
    int a_val = (down.removed.x + down.removed.y).as_int() + 1;
    int b_wide = (down.removed.y - down.removed.x + HalfInt::whole(1)).as_int();
    {
      std::vector<ArthurSummand> expect = psi.summands;
      ArthurSummand peeled{rho, a_val, b_wide};
      for (int k = 0; k < down.r; ++k) {
        auto it = std::find(expect.begin(), expect.end(), peeled);
        if (it == expect.end())
          return tag + " | e_minus removed " + down.removed.str() +
                 " which the parameter does not carry";
        expect.erase(it);
      }
      if (b_wide > 2)
        for (int k = 0; k < down.r; ++k)
          expect.push_back(ArthurSummand{rho, a_val, b_wide - 2});
      LocalArthurParameter want =
          make_parameter(down.ems.group, std::move(expect));
      if (!(psi_of_ems(down.ems) == want))
        return tag + " | e_minus parameter bookkeeping is off";
    }
    PredicateResult pu =
        predicate_upper(psi_of_ems(down.ems), rho, down.removed.x,
                        down.removed.y, down.r);
    if (!pu.ok)
      return tag + " | re-attachment requirements rejected an e_minus output: " +
             pu.failed;
    if (!(pu.psi_plus == psi))
      return tag + " | upper lift produced " + print_parameter(pu.psi_plus) +
             " instead of the original parameter";
    EPlusUpperResult up =
        e_plus_upper(down.ems, rho, down.removed.x, down.removed.y, down.r);
    if (!(up.ems == ems))
      return tag + " | e_plus_upper(e_minus(E)) = " + up.ems.str();
    if (up.added != (b_wide > 2))
      return tag + " | e_plus_upper took the wrong branch";

    ERhoMinusResult side = e_rho_minus(ems, rho);
    EmsValidation vs = validate_ems(side.ems);
    if (!vs.ok()) return tag + " | e_rho_minus output failed validation";
    if (vs.sign != v.sign) return tag + " | e_rho_minus changed the sign";
    if (side.removed.empty())
      return tag + " | e_rho_minus removed nothing from a wide block";
    for (const Segment& s : side.removed)
      if (s.rho != rho || s.x != side.removed[0].x)
        return tag + " | e_rho_minus removals disagree on label or start";
    PredicateResult pl = predicate_lower(psi_of_ems(side.ems), side.removed,
                                         side.removed[0].x);
    if (!pl.ok)
      return tag + " | re-attachment requirements rejected an e_rho_minus "
                   "output: " + pl.failed;
    if (!(pl.psi_plus == psi))
      return tag + " | lower lift produced " + print_parameter(pl.psi_plus) +
             " instead of the original parameter";
    ExtendedMultiSegment back = e_plus_lower(side.ems, rho, side.removed);
    if (!(back == ems))
      return tag + " | e_plus_lower(e_rho_minus(E)) = " + back.str();
  }
  {
    // Tempered diagonal data against the dual formula.
    int coset = rng.coin() ? 1 : 0;
    GroupFamily family = coset == 0 ? GroupFamily::Sp : GroupFamily::SOOdd;
    int rows = coset == 0 ? 1 + 2 * rng.below(2) : rng.range(1, 3);
    int order[4] = {0, 1, 2, 3};
    for (int j = 3; j > 0; --j) std::swap(order[j], order[rng.below(j + 1)]);
    std::vector<int> picks(order, order + rows);
    std::sort(picks.begin(), picks.end());
    EmsBlock block{trivial_label(), {}};
    int total = 0;
    for (int j : picks) {
      HalfInt edge = HalfInt::halves(2 * j + coset);
      block.rows.push_back(make_extended_segment(edge, edge, 0, 1));
      total += edge.twice + 1;
    }
    ExtendedMultiSegment diag =
        make_ems(GroupSpec::for_dual_dim(family, total), {block});
    ExtendedMultiSegment dualized = dual_tempered_ems(diag);
    if (dualized.group != diag.group)
      return "tempered dual changed the group of " + diag.str();
    if (!(psi_of_ems(dualized) == dual_psi(psi_of_ems(diag))))
      return "tempered dual of " + diag.str() + " carries parameter " +
             print_parameter(psi_of_ems(dualized)) + " instead of " +
             print_parameter(dual_psi(psi_of_ems(diag)));
  }
  return {};
}

std::string arthur_steps_trial(uint64_t trial_seed) {
  Rng rng(trial_seed);
  LanglandsData pi = random_langlands_data(rng);
  std::string tag = "pi = " + pi.str();
  if (pi.segments.empty()) {
    ExtendedMultiSegment diag = tempered_ems_of(pi);
    std::vector<ArthurSummand> expect;
    int sign = 1;
    bool all_plus = true;
    for (const TemperedEntry& e : pi.tempered) {
      expect.push_back(ArthurSummand{e.rho, e.a, 1});
      sign *= e.sign;
      all_plus &= e.sign == 1;
    }
    LocalArthurParameter want = make_parameter(pi.group, std::move(expect));
    if (!(psi_of_ems(diag) == want))
      return tag + " | tempered diagonal parameter is " +
             print_parameter(psi_of_ems(diag));
    if (validate_ems(diag).sign != sign)
      return tag + " | tempered diagonal sign is off";
    if (all_plus) {
      ExtendedMultiSegment dualized = dual_tempered_ems(diag);
      if (!(psi_of_ems(dualized) == dual_psi(want)))
        return tag + " | tempered dual parameter is " +
               print_parameter(psi_of_ems(dualized));
    }
    return {};
  }

  ReduceUpperResult ru = reduce_upper(pi);
  Segment front{ru.rho, ru.x, ru.y};
  auto key = [](const Segment& s) { return std::tuple(s.x - s.y, s.rho, s.x); };
  int copies = 0;
  for (const Segment& s : pi.segments) {
    if (key(s) < key(front))
      return tag + " | upper reduction skipped " + s.str();
    if (s.rho == front.rho && s.x == front.x && s.y == front.y) ++copies;
  }
  if (ru.r != copies)
    return tag + " | upper reduction miscounted " + front.str();
  std::vector<Segment> put_back(static_cast<size_t>(ru.r), front);
  if (!(insert_segments(ru.pi_minus, put_back) == pi))
    return tag + " | upper reduction does not invert by re-insertion";
  if (pi.dim() != ru.pi_minus.dim() + 2 * ru.r * front.dim())
    return tag + " | upper reduction dimension bookkeeping is off";

  ReduceLowerResult rl = reduce_lower(pi);
  const SupercuspidalLabel* least = nullptr;
  for (const Segment& s : pi.segments)
    if (least == nullptr || s.rho < *least) least = &s.rho;
  HalfInt x_min = HalfInt::whole(0);
  bool seen = false;
  for (const Segment& s : pi.segments)
    if (s.rho == *least && (!seen || s.x < x_min)) {
      x_min = s.x;
      seen = true;
    }
  std::vector<Segment> expect_removed;
  for (const Segment& s : pi.segments)
    if (s.rho == *least && s.x == x_min) expect_removed.push_back(s);
  std::vector<Segment> got_removed = rl.removed;
  std::sort(expect_removed.begin(), expect_removed.end());
  std::sort(got_removed.begin(), got_removed.end());
  if (rl.rho != *least || rl.x_min != x_min || got_removed != expect_removed)
    return tag + " | lower reduction picked the wrong segment set";
  if (!(insert_segments(rl.pi_minus, rl.removed) == pi))
    return tag + " | lower reduction does not invert by re-insertion";

  LocalArthurParameter psi = random_good_parameter(rng);
  std::string both = tag + " | psi = " + print_parameter(psi);
  {
    MaxBReport got = max_b_check(pi, psi);
    std::set<SupercuspidalLabel> labels;
    for (const Segment& s : pi.segments) labels.insert(s.rho);
    for (const ArthurSummand& s : psi.summands) labels.insert(s.rho);
    bool ok = true;
    bool equal = true;
    for (const SupercuspidalLabel& rho : labels) {
      int max_b = 0;
      for (const ArthurSummand& s : psi.summands)
        if (s.rho == rho) max_b = std::max(max_b, s.b);
      HalfInt bound = HalfInt::whole(0);
      for (const Segment& s : pi.segments)
        if (s.rho == rho) bound = min(bound, s.x - s.y);
      if (!(HalfInt::whole(1 - max_b) <= bound)) ok = false;
      if (HalfInt::whole(1 - max_b) != bound) equal = false;
    }
    equal = equal && ok;
    if (got.ok != ok || got.equality != equal)
      return both + " | width bound check disagrees with the direct count";
  }
  {
    PredicateResult got = predicate_upper(psi, ru.rho, ru.x, ru.y, ru.r);
    LocalArthurParameter plus;
    bool ok = oracle_upper(psi, ru.rho, ru.x, ru.y, ru.r, &plus);
    if (got.ok != ok)
      return both + " | upper requirement verdict disagrees with the " +
             "bullet-by-bullet evaluation";
    if (ok && !(got.psi_plus == plus))
      return both + " | upper lift built " + print_parameter(got.psi_plus) +
             " instead of " + print_parameter(plus);
  }
  {
    PredicateResult got = predicate_lower(psi, rl.removed, rl.x_min);
    LocalArthurParameter plus;
    bool ok = oracle_lower(psi, rl.removed, rl.x_min, &plus);
    if (got.ok != ok)
      return both + " | lower requirement verdict disagrees with the " +
             "bullet-by-bullet evaluation";
    if (ok && !(got.psi_plus == plus))
      return both + " | lower lift built " + print_parameter(got.psi_plus) +
             " instead of " + print_parameter(plus);
  }
  return {};
}

std::string roundtrip_trial(uint64_t trial_seed) {
  Rng rng(trial_seed);
  {
    LocalArthurParameter psi = random_good_parameter(rng);
    std::string text = print_parameter(psi);
    LocalArthurParameter back = parse_parameter(text);
    if (!(back == psi)) return "parameter reparse drifted: " + text;
    if (print_parameter(back) != text)
      return "parameter text is not stable: " + text;
    std::string encoded = dump_json(param_to_json(psi));
    LocalArthurParameter decoded = param_from_json(json::parse(encoded));
    if (!(decoded == psi)) return "parameter JSON drifted: " + text;
    if (dump_json(param_to_json(decoded)) != encoded)
      return "parameter JSON is not byte-stable: " + text;

    LocalLParameter phi = phi_of(psi);
    std::string ltext = print_l_parameter(phi);
    LocalLParameter lback = parse_l_parameter(ltext);
    if (!(lback == phi)) return "L-parameter reparse drifted: " + ltext;
    if (print_l_parameter(lback) != ltext)
      return "L-parameter text is not stable: " + ltext;
    std::string lenc = dump_json(lparam_to_json(phi));
    LocalLParameter ldec = lparam_from_json(json::parse(lenc));
    if (!(ldec == phi) || dump_json(lparam_to_json(ldec)) != lenc)
      return "L-parameter JSON is not byte-stable: " + ltext;
  }
  {
    ExtendedMultiSegment ems = random_sorted_ems(rng, rng.coin());
    std::string encoded = dump_json(ems_to_json(ems));
    ExtendedMultiSegment back = ems_from_json(json::parse(encoded));
    if (!(back == ems)) return "segment-family JSON drifted: " + ems.str();
    if (dump_json(ems_to_json(back)) != encoded)
      return "segment-family JSON is not byte-stable: " + ems.str();
  }
  {
    LanglandsData pi = random_langlands_data(rng);
    std::string encoded = dump_json(ldata_to_json(pi));
    LanglandsData back = ldata_from_json(json::parse(encoded));
    if (!(back == pi)) return "L-data JSON drifted: " + pi.str();
    if (dump_json(ldata_to_json(back)) != encoded)
      return "L-data JSON is not byte-stable: " + pi.str();
  }
  return {};
}

namespace {

LocalArthurParameter case_param(const json& c, const char* key) {
  return parse_parameter(c.at(key).get<std::string>());
}

std::string diff(const std::string& got, const std::string& want) {
  return "got " + got + ", expected " + want;
}

std::string fixture_error(const json& c) {
  if (!c.contains("provenance") || !c.at("provenance").is_string() ||
      c.at("provenance").get<std::string>().empty())
    return "missing provenance";
  const std::string check = c.at("check").get<std::string>();
  const json& e = c.at("expect");

  if (check == "param-triangle") {
    auto blocks = unramified_reduction(phi_of(case_param(c, "param")));
    if (blocks.size() != 1) return "expected a single reduced block";
    std::string got = rank_triangle(blocks.begin()->second).str();
    std::string want = e.at("triangle").get<std::string>();
    return got == want ? "" : diff(got, want);
  }
  if (check == "m-matrix") {
    std::vector<HalfInt> grid;
    for (const json& g : c.at("grid"))
      grid.push_back(parse_half(g.get<std::string>()));
    std::string got = m_matrix(parse_half(c.at("x").get<std::string>()),
                               c.at("a").get<int>(), grid)
                          .str();
    std::string want = e.at("triangle").get<std::string>();
    return got == want ? "" : diff(got, want);
  }
  if (check == "partitions") {
    PartitionPair pp = partitions_of(case_param(c, "param"));
    std::string wantA = e.at("pA").get<std::string>();
    std::string wantD = e.at("pD").get<std::string>();
    if (pp.pA.str() != wantA) return "pA " + diff(pp.pA.str(), wantA);
    if (pp.pD.str() != wantD) return "pD " + diff(pp.pD.str(), wantD);
    return "";
  }
  if (check == "compare") {
    OrderResult got =
        compare(case_param(c, "left"), case_param(c, "right"),
                parse_order_kind(c.at("order").get<std::string>()));
    std::string want = e.at("result").get<std::string>();
    return std::string(order_result_name(got)) == want
               ? ""
               : diff(std::string(order_result_name(got)), want);
  }
  if (check == "poset") {
    std::vector<LocalArthurParameter> list;
    for (const json& p : c.at("list"))
      list.push_back(parse_parameter(p.get<std::string>()));
    OrderKind kind = parse_order_kind(c.at("order").get<std::string>());
    std::vector<std::pair<int, int>> want;
    for (const json& edge : e.at("edges"))
      want.emplace_back(edge.at(0).get<int>(), edge.at(1).get<int>());
    std::vector<std::pair<int, int>> got = poset_edges(list, kind);
    if (got != want) {
      std::string s = "edges";
      for (auto [lo, hi] : got)
        s += " (" + std::to_string(lo) + "," + std::to_string(hi) + ")";
      return s;
    }
    if (e.contains("maxima")) {
      ExtremalReport ext = extremal(list, kind);
      std::vector<int> maxima, minima;
      for (const json& k : e.at("maxima")) maxima.push_back(k.get<int>());
      for (const json& k : e.at("minima")) minima.push_back(k.get<int>());
      if (ext.maxima != maxima || ext.minima != minima)
        return "extremal elements are off";
    }
    return "";
  }
  if (check == "dual") {
    std::string got = print_parameter(dual_psi(case_param(c, "param")));
    std::string want = e.at("param").get<std::string>();
    return got == want ? "" : diff(got, want);
  }
  if (check == "raising") {
    std::vector<std::pair<std::string, std::string>> got, want;
    for (const RaisingMove& m : enumerate_raising(case_param(c, "param")))
      got.emplace_back(std::string(operator_kind_name(m.op.kind)),
                       print_parameter(m.result));
    for (const json& m : e.at("moves"))
      want.emplace_back(m.at("kind").get<std::string>(),
                        m.at("result").get<std::string>());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got == want) return "";
    std::string s = "moves";
    for (const auto& [kind, result] : got) s += " " + kind + " -> " + result;
    return s;
  }
  if (check == "apply") {
    OperatorDescriptor op;
    op.rho = parse_label(c.at("rho").get<std::string>());
    op.i = c.at("i").get<int>();
    if (c.contains("j")) op.j = c.at("j").get<int>();
    const std::string kind_name = c.at("kind").get<std::string>();
    bool found = false;
    for (OperatorKind k :
         {OperatorKind::UiInverse, OperatorKind::DualUiDual,
          OperatorKind::DualMinus, OperatorKind::Ui,
          OperatorKind::DualUiDualInverse, OperatorKind::DualPlus})
      if (kind_name == operator_kind_name(k)) {
        op.kind = k;
        found = true;
      }
    if (!found) return "unknown operator kind '" + kind_name + "'";
    ApplyResult res = apply(case_param(c, "param"), op);
    if (res.changed != e.at("changed").get<bool>())
      return std::string("changed ") + (res.changed ? "true" : "false");
    std::string got = print_parameter(res.parameter);
    std::string want = e.at("result").get<std::string>();
    return got == want ? "" : diff(got, want);
  }
  if (check == "ems-psi") {
    std::string got = print_parameter(psi_of_ems(ems_from_json(c.at("ems"))));
    std::string want = e.at("param").get<std::string>();
    return got == want ? "" : diff(got, want);
  }
  if (check == "ems-validate") {
    EmsValidation v = validate_ems(ems_from_json(c.at("ems")));
    if (v.ok() != e.at("ok").get<bool>())
      return std::string("validity ") + (v.ok() ? "true" : "false");
    if (v.sign != e.at("sign").get<int>())
      return "sign " + std::to_string(v.sign);
    return "";
  }
  if (check == "e-minus") {
    EMinusResult res = e_minus(ems_from_json(c.at("ems")),
                               parse_label(c.at("rho").get<std::string>()));
    ExtendedMultiSegment want = ems_from_json(e.at("ems"));
    if (!(res.ems == want)) return diff(res.ems.str(), want.str());
    Segment seg = segment_from_json(e.at("removed"));
    if (!(res.removed == seg)) return "removed " + res.removed.str();
    if (res.r != e.at("r").get<int>())
      return "multiplicity " + std::to_string(res.r);
    return "";
  }
  if (check == "e-rho-minus") {
    ERhoMinusResult res = e_rho_minus(
        ems_from_json(c.at("ems")), parse_label(c.at("rho").get<std::string>()));
    ExtendedMultiSegment want = ems_from_json(e.at("ems"));
    if (!(res.ems == want)) return diff(res.ems.str(), want.str());
    std::vector<Segment> got = res.removed;
    std::vector<Segment> segs = segments_from_json(e.at("removed"));
    std::sort(got.begin(), got.end());
    std::sort(segs.begin(), segs.end());
    if (got != segs) {
      std::string s = "removed";
      for (const Segment& seg : got) s += " " + seg.str();
      return s;
    }
    return "";
  }
  if (check == "e-plus-upper") {
    EPlusUpperResult res = e_plus_upper(
        ems_from_json(c.at("ems")), parse_label(c.at("rho").get<std::string>()),
        parse_half(c.at("x").get<std::string>()),
        parse_half(c.at("y").get<std::string>()), c.at("r").get<int>());
    ExtendedMultiSegment want = ems_from_json(e.at("ems"));
    if (!(res.ems == want)) return diff(res.ems.str(), want.str());
    if (res.added != e.at("added").get<bool>()) return "wrong branch";
    return "";
  }
  if (check == "e-plus-lower") {
    ExtendedMultiSegment got = e_plus_lower(
        ems_from_json(c.at("ems")), parse_label(c.at("rho").get<std::string>()),
        segments_from_json(c.at("removed")));
    ExtendedMultiSegment want = ems_from_json(e.at("ems"));
    return got == want ? "" : diff(got.str(), want.str());
  }
  if (check == "dual-tempered") {
    ExtendedMultiSegment got = dual_tempered_ems(ems_from_json(c.at("ems")));
    ExtendedMultiSegment want = ems_from_json(e.at("ems"));
    return got == want ? "" : diff(got.str(), want.str());
  }
  if (check == "ldata-str") {
    LanglandsData pi = ldata_from_json(c.at("ldata"));
    std::string want = e.at("str").get<std::string>();
    if (pi.str() != want) return diff(pi.str(), want);
    if (e.contains("dim") && pi.dim() != e.at("dim").get<int>())
      return "dimension " + std::to_string(pi.dim());
    return "";
  }
  if (check == "reduce-upper") {
    ReduceUpperResult res = reduce_upper(ldata_from_json(c.at("ldata")));
    LanglandsData want = ldata_from_json(e.at("pi_minus"));
    if (!(res.pi_minus == want)) return diff(res.pi_minus.str(), want.str());
    if (res.rho != parse_label(e.at("rho").get<std::string>()))
      return "label " + print_label(res.rho);
    if (res.x != parse_half(e.at("x").get<std::string>()) ||
        res.y != parse_half(e.at("y").get<std::string>()))
      return "segment [" + res.x.str() + "," + (-res.y).str() + "]";
    if (res.r != e.at("r").get<int>())
      return "multiplicity " + std::to_string(res.r);
    return "";
  }
  if (check == "reduce-lower") {
    ReduceLowerResult res = reduce_lower(ldata_from_json(c.at("ldata")));
    LanglandsData want = ldata_from_json(e.at("pi_minus"));
    if (!(res.pi_minus == want)) return diff(res.pi_minus.str(), want.str());
    std::vector<Segment> got = res.removed;
    std::vector<Segment> segs = segments_from_json(e.at("removed"));
    std::sort(got.begin(), got.end());
    std::sort(segs.begin(), segs.end());
    if (got != segs) {
      std::string s = "removed";
      for (const Segment& seg : got) s += " " + seg.str();
      return s;
    }
    if (res.x_min != parse_half(e.at("x_min").get<std::string>()))
      return "x_min " + res.x_min.str();
    return "";
  }
  if (check == "insert-segments") {
    LanglandsData got = insert_segments(ldata_from_json(c.at("ldata")),
                                        segments_from_json(c.at("segments")));
    LanglandsData want = ldata_from_json(e.at("ldata"));
    return got == want ? "" : diff(got.str(), want.str());
  }
  if (check == "max-b") {
    MaxBReport got = max_b_check(ldata_from_json(c.at("ldata")),
                                 case_param(c, "param"));
    if (got.ok != e.at("ok").get<bool>())
      return std::string("bound ") + (got.ok ? "holds" : "fails");
    if (got.equality != e.at("equality").get<bool>())
      return std::string("equality ") + (got.equality ? "holds" : "fails");
    return "";
  }
  if (check == "predicate-upper") {
    PredicateResult got = predicate_upper(
        case_param(c, "param"), parse_label(c.at("rho").get<std::string>()),
        parse_half(c.at("x").get<std::string>()),
        parse_half(c.at("y").get<std::string>()), c.at("r").get<int>());
    if (got.ok != e.at("ok").get<bool>())
      return std::string("verdict ") + (got.ok ? "ok" : got.failed);
    if (got.ok && e.contains("psi_plus") &&
        print_parameter(got.psi_plus) != e.at("psi_plus").get<std::string>())
      return "lift " + print_parameter(got.psi_plus);
    return "";
  }
  if (check == "predicate-lower") {
    PredicateResult got = predicate_lower(
        case_param(c, "param"), segments_from_json(c.at("removed")),
        parse_half(c.at("x_min").get<std::string>()));
    if (got.ok != e.at("ok").get<bool>())
      return std::string("verdict ") + (got.ok ? "ok" : got.failed);
    if (got.ok && e.contains("psi_plus") &&
        print_parameter(got.psi_plus) != e.at("psi_plus").get<std::string>())
      return "lift " + print_parameter(got.psi_plus);
    return "";
  }
  if (check == "tempered-ems") {
    ExtendedMultiSegment got = tempered_ems_of(ldata_from_json(c.at("ldata")));
    ExtendedMultiSegment want = ems_from_json(e.at("ems"));
    return got == want ? "" : diff(got.str(), want.str());
  }
  return "unknown check kind '" + check + "'";
}

std::string resolve_fixtures(const std::string& explicit_path) {
  if (!explicit_path.empty()) return explicit_path;
  if (const char* env = std::getenv("ARTHURLAB_FIXTURES"))
    if (*env != '\0') return env;
  return "fixtures/corpus.json";
}

void run_examples(const std::string& path, SuiteReport& rep) {
  std::ifstream in(path);
  if (!in) {
    rep.trials = 1;
    rep.failures = 1;
    rep.first_failure = 0;
    rep.first_counterexample = "cannot open fixture corpus at " + path;
    return;
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const std::exception& ex) {
    rep.trials = 1;
    rep.failures = 1;
    rep.first_failure = 0;
    rep.first_counterexample = std::string("corpus is not valid JSON: ") +
                               ex.what();
    return;
  }
  uint64_t index = 0;
  for (const json& c : doc.at("cases")) {
    std::string id = c.contains("id") ? c.at("id").get<std::string>()
                                      : "case-" + std::to_string(index);
    std::string err;
    try {
      err = fixture_error(c);
    } catch (const std::exception& ex) {
      err = std::string("unhandled: ") + ex.what();
    }
    if (!err.empty()) {
      ++rep.failures;
      if (rep.first_failure < 0) {
        rep.first_failure = static_cast<int64_t>(index);
        rep.first_counterexample = id + ": " + err;
      }
    }
    ++index;
  }
  rep.trials = index;
}

void run_sharded(std::string (*trial)(uint64_t), uint64_t seed, uint64_t trials,
                 SuiteReport& rep) {
  unsigned hw = std::thread::hardware_concurrency();
  unsigned workers =
      trials < 64 ? 1 : std::min(hw == 0 ? 1u : hw, 8u);
  struct Local {
    uint64_t failures = 0;
    int64_t first = -1;
    std::string example;
  };
  std::vector<Local> locals(workers);
  auto body = [&](unsigned w) {
    for (uint64_t k = w; k < trials; k += workers) {
      std::string err;
      try {
        err = trial(mix_seed(seed, k));
      } catch (const std::exception& ex) {
        err = std::string("unhandled: ") + ex.what();
      }
      if (!err.empty()) {
        ++locals[w].failures;
        if (locals[w].first < 0) {
          locals[w].first = static_cast<int64_t>(k);
          locals[w].example = err;
        }
      }
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (std::thread& t : pool) t.join();
  }
  for (const Local& local : locals) {
    rep.failures += local.failures;
    if (local.first >= 0 &&
        (rep.first_failure < 0 || local.first < rep.first_failure)) {
      rep.first_failure = local.first;
      rep.first_counterexample =
          "trial " + std::to_string(local.first) + ": " + local.example;
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "monotonicity",  "duality",   "partition-triangle",
      "examples",      "ems-chain", "arthur-steps",
  };
  return names;
}

SuiteReport run_suite(const std::string& name, uint64_t seed, uint64_t trials,
                      const std::string& fixtures_path) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.name = name;
  rep.seed = seed;
  rep.trials = trials;
  if (name == "examples") {
    if (trials > 0) run_examples(resolve_fixtures(fixtures_path), rep);
  } else {
    static const std::map<std::string, std::string (*)(uint64_t)> table = {
        {"monotonicity", monotonicity_trial},
        {"duality", duality_trial},
        {"partition-triangle", partition_triangle_trial},
        {"ems-chain", ems_chain_trial},
        {"arthur-steps", arthur_steps_trial},
    };
    auto it = table.find(name);
    if (it == table.end())
      throw std::invalid_argument("unknown suite '" + name + "'");
    if (trials > 0) run_sharded(it->second, seed, trials, rep);
  }
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return rep;
}

}  // namespace arthurlab
