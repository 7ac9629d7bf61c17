#include "arthurlab/operators.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "arthurlab/errors.hpp"
#include "arthurlab/dsl.hpp"

namespace arthurlab {

namespace {

HalfInt one() { return HalfInt::whole(1); }

ArthurSummand dual_summand(const ArthurSummand& s) {
  return ArthurSummand{s.rho.dual(), s.b, s.a};
}

std::optional<ArthurSummand> try_row(const SupercuspidalLabel& rho, HalfInt A,
                                     HalfInt B) {
  HalfInt a = A + B + one();
  HalfInt b = A - B + one();
  if (!a.is_integer() || !b.is_integer()) return std::nullopt;
  if (a.as_int() < 1 || b.as_int() < 1) return std::nullopt;
  return ArthurSummand{rho, a.as_int(), b.as_int()};
}

void check_range(const LocalArthurParameter& psi, int i) {
  if (i < 0 || i >= static_cast<int>(psi.summands.size()))
    fail(Errc::BadIndex, "summand index " + std::to_string(i) +
                             " out of range (size " +
                             std::to_string(psi.summands.size()) + ")");
}

bool in_range(const LocalArthurParameter& psi, int i) {
  return i >= 0 && i < static_cast<int>(psi.summands.size());
}

bool row_eligible(const LocalArthurParameter& psi, int i) {
  const ArthurSummand& s = psi.summands[i];
  return s.rho.self_dual() && summand_good_parity(psi.group.family, s);
}

// Shared two-row precondition; the asymmetric inequalities are supplied by
// the caller.
bool pair_eligible(const LocalArthurParameter& psi, int i, int j) {
  if (i == j) return false;
  if (psi.summands[i].rho != psi.summands[j].rho) return false;
  return row_eligible(psi, i) && row_eligible(psi, j);
}

LocalArthurParameter replace_two(const LocalArthurParameter& psi, int i, int j,
                                 std::vector<ArthurSummand> with) {
  std::vector<ArthurSummand> rows = psi.summands;
  rows.erase(rows.begin() + std::max(i, j));
  rows.erase(rows.begin() + std::min(i, j));
  for (auto& r : with) rows.push_back(r);
  return make_parameter(psi.group, std::move(rows));
}

LocalArthurParameter replace_one(const LocalArthurParameter& psi, int i,
                                 std::vector<ArthurSummand> with) {
  std::vector<ArthurSummand> rows = psi.summands;
  rows.erase(rows.begin() + i);
  for (auto& r : with) rows.push_back(r);
  return make_parameter(psi.group, std::move(rows));
}

bool param_less(const LocalArthurParameter& a, const LocalArthurParameter& b) {
  return a.summands < b.summands;
}

int position_of(const LocalArthurParameter& psi, const ArthurSummand& value,
                int skip_copies = 0) {
  int seen = 0;
  for (int k = 0; k < static_cast<int>(psi.summands.size()); ++k) {
    if (psi.summands[k] == value) {
      if (seen == skip_copies) return k;
      ++seen;
    }
  }
  fail(Errc::InvariantBroken, "summand value not found during index transport");
}

// One valid un-merge of psi: descriptor indices (i, j) address psi itself,
// with split_twice set on the i == j splits; u and w are the produced rows in
// the i and j roles of the forward move that re-merges them.
struct Preimage {
  int i;
  int j;
  int split_twice;
  ArthurSummand u;
  ArthurSummand w;
  LocalArthurParameter parameter;
};

std::vector<Preimage> ui_preimages(const LocalArthurParameter& psi) {
  std::vector<Preimage> out;
  int n = static_cast<int>(psi.summands.size());
  auto consider = [&](const ArthurSummand& u, const ArthurSummand& w,
                      LocalArthurParameter candidate, int i, int j, int split) {
    int pu = position_of(candidate, u);
    int pw = position_of(candidate, w, u == w ? 1 : 0);
    if (!applicable_ui(candidate, pu, pw)) return;
    auto fwd = apply(candidate, OperatorDescriptor{OperatorKind::Ui, u.rho, pu, pw});
    if (fwd.changed && fwd.parameter == psi)
      out.push_back(Preimage{i, j, split, u, w, std::move(candidate)});
  };
  // Un-merging rows i and j is forced: (A_i, B_i), (A_j, B_j) come apart into
  // (A_j, B_i) and (A_i, B_j).
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      const ArthurSummand& rp = psi.summands[p];
      const ArthurSummand& rq = psi.summands[q];
      if (rp.rho != rq.rho) continue;
      auto u = try_row(rp.rho, rq.A(), rp.B());
      auto w = try_row(rp.rho, rp.A(), rq.B());
      if (!u || !w) continue;
      consider(*u, *w, replace_two(psi, p, q, {*u, *w}), p, q,
               OperatorDescriptor::kNoSplit);
    }
  }
  // Splitting row p at t (the forward move collapses the crossing row away).
  for (int p = 0; p < n; ++p) {
    const ArthurSummand& rp = psi.summands[p];
    HalfInt Ap = rp.A(), Bp = rp.B();
    for (HalfInt t = max(Bp, -Bp); t <= Ap - one(); t += one()) {
      auto u = try_row(rp.rho, t, Bp);
      auto w = try_row(rp.rho, Ap, t + one());
      if (!u || !w) continue;
      consider(*u, *w, replace_one(psi, p, {*u, *w}), p, p, t.twice);
    }
  }
  return out;
}

std::vector<Preimage> dual_ui_dual_preimages(const LocalArthurParameter& psi) {
  std::vector<Preimage> out;
  int n = static_cast<int>(psi.summands.size());
  auto consider = [&](const ArthurSummand& u, const ArthurSummand& w,
                      LocalArthurParameter candidate, int i, int j, int split) {
    int pu = position_of(candidate, u);
    int pw = position_of(candidate, w, u == w ? 1 : 0);
    if (!applicable_dual_ui_dual(candidate, pu, pw)) return;
    auto fwd = apply(candidate,
                     OperatorDescriptor{OperatorKind::DualUiDual, u.rho, pu, pw});
    if (fwd.changed && fwd.parameter == psi)
      out.push_back(Preimage{i, j, split, u, w, std::move(candidate)});
  };
  // Un-merging rows i and j: (A_i, B_i), (A_j, B_j) come apart into
  // (A_i, B_j) and (A_j, B_i).
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      const ArthurSummand& rp = psi.summands[p];
      const ArthurSummand& rq = psi.summands[q];
      if (rp.rho != rq.rho) continue;
      auto u = try_row(rp.rho, rp.A(), rq.B());
      auto w = try_row(rp.rho, rq.A(), rp.B());
      if (!u || !w) continue;
      consider(*u, *w, replace_two(psi, p, q, {*u, *w}), p, q,
               OperatorDescriptor::kNoSplit);
    }
  }
  // Splitting row p: the dropped second row forces B_i = -s - 1 for the free
  // parameter s = A_j.
  for (int p = 0; p < n; ++p) {
    const ArthurSummand& rp = psi.summands[p];
    HalfInt Ap = rp.A(), Bp = rp.B();
    for (HalfInt s = max(Bp, -Bp); s <= Ap - one(); s += one()) {
      auto u = try_row(rp.rho, Ap, -s - one());
      auto w = try_row(rp.rho, s, Bp);
      if (!u || !w) continue;
      consider(*u, *w, replace_one(psi, p, {*u, *w}), p, p, s.twice);
    }
  }
  return out;
}

// The preimage a descriptor of an inverse kind selects, or nullopt when it
// does not apply. Unpinned i == j splits resolve to the canonically least
// candidate.
std::optional<Preimage> resolve_inverse(const LocalArthurParameter& psi,
                                        const OperatorDescriptor& op) {
  std::vector<Preimage> all = op.kind == OperatorKind::UiInverse
                                  ? ui_preimages(psi)
                                  : dual_ui_dual_preimages(psi);
  std::optional<Preimage> best;
  for (auto& pre : all) {
    if (pre.i != op.i || pre.j != op.j) continue;
    if (op.has_split() && pre.split_twice != op.split_twice) continue;
    if (!label_matches(op, psi.summands[pre.i].rho)) continue;
    if (!best || param_less(pre.parameter, best->parameter)) best = std::move(pre);
  }
  return best;
}

bool label_matches(const OperatorDescriptor& op, const SupercuspidalLabel& rho) {
  return op.rho.name.empty() || op.rho == rho;
}

}  // namespace

std::string_view operator_kind_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::UiInverse: return "ui^-1";
    case OperatorKind::DualUiDual: return "dual.ui.dual";
    case OperatorKind::DualMinus: return "dual^-";
    case OperatorKind::Ui: return "ui";
    case OperatorKind::DualUiDualInverse: return "dual.ui.dual^-1";
    case OperatorKind::DualPlus: return "dual^+";
  }
  return "unknown";
}

bool is_raising(OperatorKind k) {
  return k == OperatorKind::UiInverse || k == OperatorKind::DualUiDual ||
         k == OperatorKind::DualMinus;
}

OperatorKind inverse_kind(OperatorKind k) {
  switch (k) {
    case OperatorKind::UiInverse: return OperatorKind::Ui;
    case OperatorKind::Ui: return OperatorKind::UiInverse;
    case OperatorKind::DualUiDual: return OperatorKind::DualUiDualInverse;
    case OperatorKind::DualUiDualInverse: return OperatorKind::DualUiDual;
    case OperatorKind::DualMinus: return OperatorKind::DualPlus;
    case OperatorKind::DualPlus: return OperatorKind::DualMinus;
  }
  fail(Errc::BadKind, "unknown operator kind");
}

std::string OperatorDescriptor::str() const {
  std::string out(operator_kind_name(kind));
  out += "(";
  out += std::to_string(i);
  if (j >= 0) out += "," + std::to_string(j);
  if (has_split()) out += "@" + HalfInt{split_twice}.str();
  if (!rho.name.empty()) out += ";" + print_label(rho);
  out += ")";
  return out;
}

bool applicable_ui(const LocalArthurParameter& psi, int i, int j) {
  check_range(psi, i);
  check_range(psi, j);
  if (!pair_eligible(psi, i, j)) return false;
  const ArthurSummand& si = psi.summands[i];
  const ArthurSummand& sj = psi.summands[j];
  HalfInt Ai = si.A(), Bi = si.B(), Aj = sj.A(), Bj = sj.B();
  if (!(Aj >= Ai + one() && Ai + one() >= Bj && Bj > Bi)) return false;
  for (int k = 0; k < static_cast<int>(psi.summands.size()); ++k) {
    if (k == i || k == j) continue;
    const ArthurSummand& sk = psi.summands[k];
    if (sk.rho != si.rho) continue;
    if (Bi < sk.B() && sk.B() < Bj && Ai < sk.A() && sk.A() < Aj) return false;
  }
  return true;
}

bool applicable_dual_ui_dual(const LocalArthurParameter& psi, int i, int j) {
  check_range(psi, i);
  check_range(psi, j);
  if (!pair_eligible(psi, i, j)) return false;
  const ArthurSummand& si = psi.summands[i];
  const ArthurSummand& sj = psi.summands[j];
  HalfInt Ai = si.A(), Bi = si.B(), Aj = sj.A(), Bj = sj.B();
  if (!(Ai >= Aj + one() && Aj + one() >= -Bi && -Bi > -Bj)) return false;
  for (int k = 0; k < static_cast<int>(psi.summands.size()); ++k) {
    if (k == i || k == j) continue;
    const ArthurSummand& sk = psi.summands[k];
    if (sk.rho != si.rho) continue;
    if (-Bj < -sk.B() && -sk.B() < -Bi && Aj < sk.A() && sk.A() < Ai)
      return false;
  }
  return true;
}

ApplyResult apply(const LocalArthurParameter& psi, const OperatorDescriptor& op) {
  switch (op.kind) {
    case OperatorKind::Ui: {
      if (!in_range(psi, op.i) || !in_range(psi, op.j)) return {psi, false};
      if (!label_matches(op, psi.summands[op.i].rho)) return {psi, false};
      if (!applicable_ui(psi, op.i, op.j)) return {psi, false};
      const ArthurSummand& si = psi.summands[op.i];
      const ArthurSummand& sj = psi.summands[op.j];
      std::vector<ArthurSummand> with;
      with.push_back(*try_row(si.rho, sj.A(), si.B()));
      if (auto second = try_row(si.rho, si.A(), sj.B()))
        with.push_back(*second);
      return {replace_two(psi, op.i, op.j, std::move(with)), true};
    }
    case OperatorKind::DualUiDual: {
      if (!in_range(psi, op.i) || !in_range(psi, op.j)) return {psi, false};
      if (!label_matches(op, psi.summands[op.i].rho)) return {psi, false};
      if (!applicable_dual_ui_dual(psi, op.i, op.j)) return {psi, false};
      const ArthurSummand& si = psi.summands[op.i];
      const ArthurSummand& sj = psi.summands[op.j];
      std::vector<ArthurSummand> with;
      with.push_back(*try_row(si.rho, si.A(), sj.B()));
      if (auto second = try_row(si.rho, sj.A(), si.B()))
        with.push_back(*second);
      return {replace_two(psi, op.i, op.j, std::move(with)), true};
    }
    case OperatorKind::DualMinus: {
      if (!in_range(psi, op.i)) return {psi, false};
      const ArthurSummand& s = psi.summands[op.i];
      if (!label_matches(op, s.rho) || !row_eligible(psi, op.i)) return {psi, false};
      if (s.b != s.a + 1) return {psi, false};
      return {replace_one(psi, op.i, {ArthurSummand{s.rho, s.b, s.a}}), true};
    }
    case OperatorKind::DualPlus: {
      if (!in_range(psi, op.i)) return {psi, false};
      const ArthurSummand& s = psi.summands[op.i];
      if (!label_matches(op, s.rho) || !row_eligible(psi, op.i)) return {psi, false};
      if (s.a != s.b + 1) return {psi, false};
      return {replace_one(psi, op.i, {ArthurSummand{s.rho, s.b, s.a}}), true};
    }
    case OperatorKind::UiInverse:
    case OperatorKind::DualUiDualInverse: {
      if (!in_range(psi, op.i) || !in_range(psi, op.j)) return {psi, false};
      auto pre = resolve_inverse(psi, op);
      if (!pre) return {psi, false};
      return {std::move(pre->parameter), true};
    }
  }
  return {psi, false};
}

std::vector<RaisingMove> enumerate_raising_of_kind(const LocalArthurParameter& psi,
                                                   OperatorKind kind) {
  std::vector<RaisingMove> out;
  std::set<std::vector<ArthurSummand>> seen;
  auto push = [&](OperatorDescriptor op, LocalArthurParameter res) {
    if (!seen.insert(res.summands).second) return;
    out.push_back(RaisingMove{std::move(op), std::move(res)});
  };
  switch (kind) {
    case OperatorKind::UiInverse: {
      for (auto& pre : ui_preimages(psi)) {
        SupercuspidalLabel rho = psi.summands[pre.i].rho;
        push(OperatorDescriptor{kind, rho, pre.i, pre.j, pre.split_twice},
             std::move(pre.parameter));
      }
      break;
    }
    case OperatorKind::DualUiDual: {
      int n = static_cast<int>(psi.summands.size());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j || psi.summands[i].rho != psi.summands[j].rho) continue;
          OperatorDescriptor op{kind, psi.summands[i].rho, i, j};
          auto res = apply(psi, op);
          if (res.changed) push(std::move(op), std::move(res.parameter));
        }
      break;
    }
    case OperatorKind::DualMinus: {
      int n = static_cast<int>(psi.summands.size());
      for (int i = 0; i < n; ++i) {
        OperatorDescriptor op{kind, psi.summands[i].rho, i, -1};
        auto res = apply(psi, op);
        if (res.changed) push(std::move(op), std::move(res.parameter));
      }
      break;
    }
    default:
      fail(Errc::BadKind, "enumeration is defined for raising kinds only");
  }
  return out;
}

std::vector<RaisingMove> enumerate_raising(const LocalArthurParameter& psi) {
  std::vector<RaisingMove> out;
  std::set<std::vector<ArthurSummand>> seen;
  for (OperatorKind kind : {OperatorKind::UiInverse, OperatorKind::DualUiDual,
                            OperatorKind::DualMinus}) {
    for (auto& mv : enumerate_raising_of_kind(psi, kind)) {
      if (!seen.insert(mv.result.summands).second) continue;
      out.push_back(std::move(mv));
    }
  }
  return out;
}

OperatorDescriptor dual_transport(const OperatorDescriptor& op) {
  if (!is_raising(op.kind))
    fail(Errc::BadKind, "dual transport is defined for raising kinds");
  OperatorDescriptor out = op;
  out.rho = op.rho.dual();
  if (op.kind == OperatorKind::UiInverse)
    out.kind = OperatorKind::DualUiDual;
  else if (op.kind == OperatorKind::DualUiDual)
    out.kind = OperatorKind::UiInverse;
  return out;
}

OperatorDescriptor dual_transport(const OperatorDescriptor& op,
                                  const LocalArthurParameter& context) {
  OperatorDescriptor out = dual_transport(op);
  out.split_twice = OperatorDescriptor::kNoSplit;
  if (op.kind == OperatorKind::DualMinus) {
    check_range(context, op.i);
    const ArthurSummand row = context.summands[op.i];
    auto img = apply(context, op);
    if (!img.changed)
      fail(Errc::BadIndex, "move does not apply to the context parameter");
    LocalArthurParameter dimg = dual_psi(img.parameter);
    out.i = position_of(dimg, ArthurSummand{row.rho.dual(), row.a, row.b});
    out.j = -1;
    return out;
  }
  check_range(context, op.i);
  check_range(context, op.j);
  if (op.kind == OperatorKind::UiInverse) {
    // The un-merged rows u, w trade roles: the merge that undoes the dual
    // move addresses dual(w) first, dual(u) second.
    auto pre = resolve_inverse(context, op);
    if (!pre) fail(Errc::BadIndex, "move does not apply to the context parameter");
    LocalArthurParameter dpre = dual_psi(pre->parameter);
    ArthurSummand du = dual_summand(pre->u);
    ArthurSummand dw = dual_summand(pre->w);
    out.i = position_of(dpre, dw);
    out.j = position_of(dpre, du, du == dw ? 1 : 0);
    return out;
  }
  // DualUiDual: the merged rows reappear dualized in dual(apply(context, op));
  // un-merging them there restores dual(context). A collapsed second row
  // turns into a split of the first, pinned at the smaller A-value.
  const ArthurSummand ri = context.summands[op.i];
  const ArthurSummand rj = context.summands[op.j];
  auto img = apply(context, op);
  if (!img.changed)
    fail(Errc::BadIndex, "move does not apply to the context parameter");
  LocalArthurParameter dimg = dual_psi(img.parameter);
  ArthurSummand dfirst = dual_summand(*try_row(ri.rho, ri.A(), rj.B()));
  auto second = try_row(ri.rho, rj.A(), ri.B());
  if (second) {
    ArthurSummand dsecond = dual_summand(*second);
    out.i = position_of(dimg, dfirst);
    out.j = position_of(dimg, dsecond, dfirst == dsecond ? 1 : 0);
  } else {
    out.i = out.j = position_of(dimg, dfirst);
    out.split_twice = rj.A().twice;
  }
  return out;
}

}  // namespace arthurlab
