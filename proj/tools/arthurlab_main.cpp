#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "arthurlab/dot.hpp"
#include "arthurlab/dsl.hpp"
#include "arthurlab/errors.hpp"
#include "arthurlab/json_io.hpp"
#include "arthurlab/operators.hpp"
#include "arthurlab/orders.hpp"
#include "arthurlab/suites.hpp"

namespace {

using namespace arthurlab;

int g_exit = 0;

std::string slurp_stdin() {
  std::ostringstream out;
  out << std::cin.rdbuf();
  return out.str();
}

// JSON arguments: a literal document, "-" for stdin, or "@path" for a file.
json read_json_arg(const std::string& arg) {
  if (arg == "-") return json::parse(slurp_stdin());
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in)
      throw std::invalid_argument("cannot open file '" + arg.substr(1) + "'");
    return json::parse(in);
  }
  return json::parse(arg);
}

// Bare summand sums are allowed when --group supplies the left-hand side.
std::string with_group(const std::string& text, const std::string& group) {
  if (!group.empty() && text.find('=') == std::string::npos)
    return group + " = " + text;
  return text;
}

LocalArthurParameter read_param(const std::string& text,
                                const std::string& group) {
  return parse_parameter(with_group(text, group));
}

LocalLParameter read_lparam(const std::string& text, const std::string& group) {
  return parse_l_parameter(with_group(text, group));
}

// Summand list without the "GROUP = " head, for partial sums.
std::string print_bare_sum(GroupSpec group, std::vector<ArthurSummand> sum) {
  std::string text = print_parameter(make_parameter(group, std::move(sum)));
  return text.substr(text.find(" = ") + 3);
}

void emit(const std::string& format, const std::string& text, const json& j) {
  if (format == "json")
    std::cout << dump_json(j);
  else
    std::cout << text << "\n";
}

const char* yn(bool b) { return b ? "true" : "false"; }

struct Io {
  std::string format = "text";
  std::string group;
};

std::shared_ptr<Io> add_io(CLI::App* sub, bool with_dot = false) {
  auto io = std::make_shared<Io>();
  std::vector<std::string> formats = {"text", "json"};
  if (with_dot) formats.push_back("dot");
  sub->add_option("--format", io->format, "output format")
      ->check(CLI::IsMember(formats));
  sub->add_option("--group", io->group,
                  "group prefix applied to bare summand sums, e.g. Sp:10");
  return io;
}

OperatorKind read_kind(const std::string& text) {
  for (OperatorKind k :
       {OperatorKind::UiInverse, OperatorKind::DualUiDual,
        OperatorKind::DualMinus, OperatorKind::Ui,
        OperatorKind::DualUiDualInverse, OperatorKind::DualPlus})
    if (text == operator_kind_name(k)) return k;
  throw std::invalid_argument("unknown operator kind '" + text + "'");
}

struct OpArgs {
  std::string kind;
  std::string rho;
  int i = -1;
  int j = -1;

  OperatorDescriptor descriptor() const {
    return OperatorDescriptor{read_kind(kind), parse_label(rho), i, j};
  }
};

std::shared_ptr<OpArgs> add_op_args(CLI::App* sub) {
  auto op = std::make_shared<OpArgs>();
  sub->add_option("--kind", op->kind,
                  "operator kind: ui^-1, dual.ui.dual, dual^-, ui, "
                  "dual.ui.dual^-1, dual^+")
      ->required();
  sub->add_option("--rho", op->rho, "label, e.g. tr(1,O)")->required();
  sub->add_option("-i", op->i, "first row index (0-based)")->required();
  sub->add_option("-j", op->j, "second row index for pair kinds");
  return op;
}

void print_validation(const ValidationReport& rep) {
  std::cout << "dimension_ok: " << yn(rep.dimension_ok) << "\n";
  std::cout << "all_good_parity: " << yn(rep.all_good_parity) << "\n";
  std::cout << "summand_good_parity:";
  for (bool b : rep.summand_good_parity) std::cout << " " << (b ? 1 : 0);
  std::cout << "\n";
  for (const std::string& note : rep.notes) std::cout << "note: " << note << "\n";
}

void print_ems_validation(const EmsValidation& v) {
  std::cout << "ok: " << yn(v.ok()) << "\n";
  std::cout << "sign: " << v.sign << "\n";
  std::cout << "row_ranges_ok: " << yn(v.row_ranges_ok) << "\n";
  std::cout << "order_admissible: " << yn(v.order_admissible) << "\n";
  std::cout << "order_b_sorted: " << yn(v.order_b_sorted) << "\n";
  std::cout << "sign_ok: " << yn(v.sign_ok) << "\n";
  std::cout << "psi_good_parity: " << yn(v.psi_good_parity) << "\n";
  std::cout << "dimension_ok: " << yn(v.dimension_ok) << "\n";
  for (const std::string& note : v.notes) std::cout << "note: " << note << "\n";
}

json indices_json(const std::vector<int>& v) {
  json a = json::array();
  for (int k : v) a.push_back(k);
  return a;
}

void build_app(CLI::App& app) {
  app.require_subcommand(1);

  {
    auto* sub = app.add_subcommand("parse", "parse and reprint canonically");
    auto io = add_io(sub);
    auto dsl = std::make_shared<std::string>();
    auto kind = std::make_shared<std::string>("param");
    sub->add_option("dsl", *dsl, "parameter text")->required();
    sub->add_option("--kind", *kind, "param or lparam")
        ->check(CLI::IsMember({"param", "lparam"}));
    sub->callback([io, dsl, kind] {
      if (*kind == "lparam") {
        LocalLParameter phi = read_lparam(*dsl, io->group);
        emit(io->format, print_l_parameter(phi), lparam_to_json(phi));
      } else {
        LocalArthurParameter psi = read_param(*dsl, io->group);
        emit(io->format, print_parameter(psi), param_to_json(psi));
      }
    });
  }
  {
    auto* sub = app.add_subcommand("validate", "dimension and parity report");
    auto io = add_io(sub);
    auto dsl = std::make_shared<std::string>();
    sub->add_option("dsl", *dsl)->required();
    sub->callback([io, dsl] {
      ValidationReport rep = validate_parameter(read_param(*dsl, io->group));
      if (io->format == "json")
        std::cout << dump_json(validation_to_json(rep));
      else
        print_validation(rep);
    });
  }
  {
    auto* sub = app.add_subcommand("dual", "swap the two SL2 factors");
    auto io = add_io(sub);
    auto dsl = std::make_shared<std::string>();
    sub->add_option("dsl", *dsl)->required();
    sub->callback([io, dsl] {
      LocalArthurParameter d = dual_psi(read_param(*dsl, io->group));
      emit(io->format, print_parameter(d), param_to_json(d));
    });
  }
  {
    auto* sub = app.add_subcommand("phi", "attached L-parameter");
    auto io = add_io(sub);
    auto dsl = std::make_shared<std::string>();
    sub->add_option("dsl", *dsl)->required();
    sub->callback([io, dsl] {
      LocalLParameter phi = phi_of(read_param(*dsl, io->group));
      emit(io->format, print_l_parameter(phi), lparam_to_json(phi));
    });
  }
  {
    auto* sub = app.add_subcommand("lambda", "infinitesimal exponent multiset");
    auto io = add_io(sub);
    auto dsl = std::make_shared<std::string>();
    sub->add_option("dsl", *dsl)->required();
    sub->callback([io, dsl] {
      InfinitesimalClass lam = infinitesimal_of(read_param(*dsl, io->group));
      json j = json::object();
      for (const auto& [rho, xs] : lam.exponents) {
        json a = json::array();
        for (HalfInt x : xs) a.push_back(x.str());
        j[print_label(rho)] = a;
      }
      emit(io->format, lam.str(), j);
    });
  }
  {
    auto* sub = app.add_subcommand("partitions", "pA and pD of a parameter");
    auto io = add_io(sub);
    auto dsl = std::make_shared<std::string>();
    sub->add_option("dsl", *dsl)->required();
    sub->callback([io, dsl] {
      PartitionPair pp = partitions_of(read_param(*dsl, io->group));
      emit(io->format, "pA: " + pp.pA.str() + "\npD: " + pp.pD.str(),
           json{{"pA", pp.pA.str()}, {"pD", pp.pD.str()}});
    });
  }
  {
    auto* sub = app.add_subcommand(
        "extremal-lambda", "open and zero parameters of the same class");
    auto io = add_io(sub);
    auto dsl = std::make_shared<std::string>();
    sub->add_option("dsl", *dsl)->required();
    sub->callback([io, dsl] {
      LambdaExtremes ext =
          extremal_parameters_of_lambda(read_param(*dsl, io->group));
      emit(io->format,
           "open: " + print_parameter(ext.open) +
               "\nzero: " + print_parameter(ext.zero),
           json{{"open", param_to_json(ext.open)},
                {"zero", param_to_json(ext.zero)}});
    });
  }
  {
    auto* sub = app.add_subcommand(
        "split", "good-parity part plus paired complement");
    auto io = add_io(sub);
    auto dsl = std::make_shared<std::string>();
    sub->add_option("dsl", *dsl)->required();
    sub->callback([io, dsl] {
      LocalArthurParameter psi = read_param(*dsl, io->group);
      GoodParitySplit sp = good_parity_split(psi);
      std::string good = print_bare_sum(psi.group, sp.good);
      std::string paired = print_bare_sum(psi.group, sp.paired);
      emit(io->format, "good: " + good + "\npaired: " + paired,
           json{{"good", good}, {"paired", paired}});
    });
  }
  {
    auto* sub = app.add_subcommand("compare", "order comparison");
    auto io = add_io(sub);
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    auto order = std::make_shared<std::string>();
    sub->add_option("left", *left)->required();
    sub->add_option("right", *right)->required();
    sub->add_option("--order", *order, "O, A, D, or C")->required();
    sub->callback([io, left, right, order] {
      LocalArthurParameter a = read_param(*left, io->group);
      LocalArthurParameter b = read_param(*right, io->group);
      OrderKind kind = parse_order_kind(*order);
      OrderResult res = compare(a, b, kind);
      std::string name(order_result_name(res));
      bool preorder_note = (kind == OrderKind::A || kind == OrderKind::D) &&
                           res == OrderResult::Equal && !(a == b);
      json j{{"order", std::string(order_kind_name(kind))}, {"result", name}};
      std::string text = name;
      if (preorder_note) {
        j["note"] = "preorder-equal, parameters differ";
        text += "\nnote: preorder-equal, parameters differ";
      }
      emit(io->format, text, j);
    });
  }
  {
    auto* sub = app.add_subcommand("extremal", "maxima and minima of a list");
    auto io = add_io(sub);
    auto list = std::make_shared<std::vector<std::string>>();
    auto order = std::make_shared<std::string>();
    sub->add_option("dsl", *list)->required()->expected(-1);
    sub->add_option("--order", *order, "O, A, D, or C")->required();
    sub->callback([io, list, order] {
      std::vector<LocalArthurParameter> params;
      for (const std::string& text : *list)
        params.push_back(read_param(text, io->group));
      ExtremalReport rep = extremal(params, parse_order_kind(*order));
      std::string text = "maxima:";
      for (int k : rep.maxima) text += " " + std::to_string(k);
      text += "\nminima:";
      for (int k : rep.minima) text += " " + std::to_string(k);
      emit(io->format, text,
           json{{"maxima", indices_json(rep.maxima)},
                {"minima", indices_json(rep.minima)}});
    });
  }
  {
    auto* sub = app.add_subcommand("poset", "cover relations of a list");
    auto io = add_io(sub, /*with_dot=*/true);
    auto list = std::make_shared<std::vector<std::string>>();
    auto order = std::make_shared<std::string>();
    sub->add_option("dsl", *list)->required()->expected(-1);
    sub->add_option("--order", *order, "O, A, D, or C")->required();
    sub->callback([io, list, order] {
      std::vector<LocalArthurParameter> params;
      for (const std::string& text : *list)
        params.push_back(read_param(text, io->group));
      OrderKind kind = parse_order_kind(*order);
      if (io->format == "dot") {
        std::cout << poset_dot(params, kind);
        return;
      }
      std::vector<std::pair<int, int>> edges = poset_edges(params, kind);
      if (io->format == "json") {
        json a = json::array();
        for (auto [lo, hi] : edges) a.push_back(json::array({lo, hi}));
        std::cout << dump_json(json{{"edges", a}});
        return;
      }
      for (auto [lo, hi] : edges)
        std::cout << lo << " < " << hi << "\n";
    });
  }
  {
    auto* sub = app.add_subcommand("apply", "apply one operator descriptor");
    auto io = add_io(sub);
    auto dsl = std::make_shared<std::string>();
    auto op = add_op_args(sub);
    sub->add_option("dsl", *dsl)->required();
    sub->callback([io, dsl, op] {
      ApplyResult res = apply(read_param(*dsl, io->group), op->descriptor());
      emit(io->format,
           "result: " + print_parameter(res.parameter) +
               "\nchanged: " + yn(res.changed),
           json{{"result", param_to_json(res.parameter)},
                {"changed", res.changed}});
    });
  }
  {
    auto* sub = app.add_subcommand("raise", "enumerate raising moves");
    auto io = add_io(sub);
    auto dsl = std::make_shared<std::string>();
    auto kind = std::make_shared<std::string>();
    sub->add_option("dsl", *dsl)->required();
    sub->add_option("--kind", *kind,
                    "restrict to one kind (no cross-kind deduplication)");
    sub->callback([io, dsl, kind] {
      LocalArthurParameter psi = read_param(*dsl, io->group);
      std::vector<RaisingMove> moves =
          kind->empty() ? enumerate_raising(psi)
                        : enumerate_raising_of_kind(psi, read_kind(*kind));
      if (io->format == "json") {
        json a = json::array();
        for (const RaisingMove& m : moves)
          a.push_back(json{{"op", descriptor_to_json(m.op)},
                           {"result", param_to_json(m.result)}});
        std::cout << dump_json(json{{"moves", a}});
        return;
      }
      for (const RaisingMove& m : moves)
        std::cout << m.op.str() << " -> " << print_parameter(m.result) << "\n";
    });
  }
  {
    auto* sub = app.add_subcommand("transport", "conjugate a move by duality");
    auto io = add_io(sub);
    auto op = add_op_args(sub);
    auto context = std::make_shared<std::string>();
    sub->add_option("--context", *context,
                    "parameter the indices refer to; re-targets them to its "
                    "dual");
    sub->callback([io, op, context] {
      OperatorDescriptor got =
          context->empty()
              ? dual_transport(op->descriptor())
              : dual_transport(op->descriptor(),
                               read_param(*context, io->group));
      emit(io->format, got.str(), descriptor_to_json(got));
    });
  }
  {
    auto* sub = app.add_subcommand("cancel", "strip the common summand part");
    auto io = add_io(sub);
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    sub->add_option("left", *left, "L-parameter text")->required();
    sub->add_option("right", *right, "L-parameter text")->required();
    sub->callback([io, left, right] {
      auto [a, b] = cancel_common(read_lparam(*left, io->group),
                                  read_lparam(*right, io->group));
      emit(io->format,
           "left: " + print_l_parameter(a) + "\nright: " + print_l_parameter(b),
           json{{"left", lparam_to_json(a)}, {"right", lparam_to_json(b)}});
    });
  }
  {
    auto* sub = app.add_subcommand(
        "reduce", "unramified blocks of an L-parameter");
    auto io = add_io(sub);
    auto dsl = std::make_shared<std::string>();
    sub->add_option("dsl", *dsl, "L-parameter text")->required();
    sub->callback([io, dsl] {
      auto blocks = unramified_reduction(read_lparam(*dsl, io->group));
      if (io->format == "json") {
        json a = json::array();
        for (const auto& [rho, block] : blocks) {
          json grid = json::array();
          for (HalfInt x : block.grid) grid.push_back(x.str());
          json sums = json::array();
          for (const auto& [x, n] : block.summands)
            sums.push_back(json{{"x", x.str()}, {"a", n}});
          a.push_back(json{{"rho", print_label(rho)},
                           {"grid", grid},
                           {"summands", sums}});
        }
        std::cout << dump_json(json{{"blocks", a}});
        return;
      }
      for (const auto& [rho, block] : blocks) {
        std::cout << print_label(rho) << ": grid =";
        for (HalfInt x : block.grid) std::cout << " " << x.str();
        std::cout << "; summands =";
        for (const auto& [x, n] : block.summands)
          std::cout << " (" << x.str() << "," << n << ")";
        std::cout << "\n";
      }
    });
  }
  {
    auto* sub = app.add_subcommand("mmatrix", "matrix of one twisted summand");
    auto io = add_io(sub);
    auto x = std::make_shared<std::string>();
    auto a = std::make_shared<int>(1);
    auto grid = std::make_shared<std::vector<std::string>>();
    sub->add_option("--x", *x, "twist exponent")->required();
    sub->add_option("--a", *a, "summand size")->required();
    sub->add_option("grid", *grid, "grid points, strictly increasing")
        ->required()
        ->expected(-1);
    sub->callback([io, x, a, grid] {
      std::vector<HalfInt> points;
      for (const std::string& g : *grid) points.push_back(parse_half(g));
      RankTriangle t = m_matrix(parse_half(*x), *a, points);
      emit(io->format, t.str(), triangle_to_json(t));
    });
  }
  {
    auto* sub = app.add_subcommand(
        "triangle", "rank triangles of a parameter's L-parameter");
    auto io = add_io(sub);
    auto dsl = std::make_shared<std::string>();
    auto as_l = std::make_shared<bool>(false);
    sub->add_option("dsl", *dsl)->required();
    sub->add_flag("--l", *as_l, "input is an L-parameter, skip the spread");
    sub->callback([io, dsl, as_l] {
      LocalLParameter phi = *as_l ? read_lparam(*dsl, io->group)
                                  : phi_of(read_param(*dsl, io->group));
      auto blocks = unramified_reduction(phi);
      if (io->format == "json") {
        json a = json::array();
        for (const auto& [rho, block] : blocks)
          a.push_back(json{{"rho", print_label(rho)},
                           {"triangle", triangle_to_json(rank_triangle(block))}});
        std::cout << dump_json(json{{"blocks", a}});
        return;
      }
      for (const auto& [rho, block] : blocks)
        std::cout << print_label(rho) << ": " << rank_triangle(block).str()
                  << "\n";
    });
  }
  {
    auto* sub = app.add_subcommand("entry", "closed-form rank entry");
    auto io = add_io(sub);
    auto A = std::make_shared<std::string>();
    auto B = std::make_shared<std::string>();
    auto x = std::make_shared<std::string>();
    auto y = std::make_shared<std::string>();
    sub->add_option("--A", *A)->required();
    sub->add_option("--B", *B)->required();
    sub->add_option("--x", *x, "right end of the window")->required();
    sub->add_option("--y", *y, "left end of the window")->required();
    sub->callback([io, A, B, x, y] {
      int value = rank_entry_closed_form(parse_half(*A), parse_half(*B),
                                         parse_half(*x), parse_half(*y));
      emit(io->format, std::to_string(value), json{{"entry", value}});
    });
  }
  {
    auto* sub = app.add_subcommand("closure", "closure order on L-parameters");
    auto io = add_io(sub);
    auto left = std::make_shared<std::string>();
    auto right = std::make_shared<std::string>();
    sub->add_option("left", *left, "L-parameter text")->required();
    sub->add_option("right", *right, "L-parameter text")->required();
    sub->callback([io, left, right] {
      OrderResult res = closure_compare(read_lparam(*left, io->group),
                                        read_lparam(*right, io->group));
      std::string name(order_result_name(res));
      emit(io->format, name, json{{"result", name}});
    });
  }
  {
    auto* sub = app.add_subcommand(
        "triangle-partition", "partition recovered from a triangle");
    auto io = add_io(sub);
    auto text = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    sub->add_option("triangle", *text, "row string, e.g. '1 1 1 / 3 1 / 1'")
        ->required();
    sub->add_option("--n", *n, "total size")->required();
    sub->callback([io, text, n] {
      Partition p = partition_from_triangle(RankTriangle::parse(*text), *n);
      emit(io->format, p.str(), json{{"partition", p.str()}});
    });
  }

  auto* ems = app.add_subcommand("ems", "extended multi-segment operations");
  ems->require_subcommand(1);
  {
    auto* sub = ems->add_subcommand("validate", "admissibility report");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    sub->add_option("ems", *doc, "JSON document, '-' or '@file'")->required();
    sub->callback([io, doc] {
      EmsValidation v = validate_ems(ems_from_json(read_json_arg(*doc)));
      if (io->format == "json")
        std::cout << dump_json(ems_validation_to_json(v));
      else
        print_ems_validation(v);
    });
  }
  {
    auto* sub = ems->add_subcommand("psi", "attached Arthur parameter");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    sub->add_option("ems", *doc)->required();
    sub->callback([io, doc] {
      LocalArthurParameter psi = psi_of_ems(ems_from_json(read_json_arg(*doc)));
      emit(io->format, print_parameter(psi), param_to_json(psi));
    });
  }
  {
    auto* sub = ems->add_subcommand(
        "dual-tempered", "dual of diagonal all-plus data");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    sub->add_option("ems", *doc)->required();
    sub->callback([io, doc] {
      ExtendedMultiSegment out =
          dual_tempered_ems(ems_from_json(read_json_arg(*doc)));
      emit(io->format, out.str(), ems_to_json(out));
    });
  }
  for (RowSurgery kind : {RowSurgery::Shift, RowSurgery::Add}) {
    auto* sub = ems->add_subcommand(
        kind == RowSurgery::Shift ? "shift" : "add",
        kind == RowSurgery::Shift ? "translate rows: [A,B] to [A+d,B+d]"
                                  : "widen rows: ([A,B],l) to ([A+d,B-d],l+d)");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    auto rho = std::make_shared<std::string>();
    auto row = std::make_shared<int>(-1);
    auto d = std::make_shared<int>(0);
    sub->add_option("ems", *doc)->required();
    sub->add_option("--rho", *rho)->required();
    sub->add_option("--row", *row, "row index; whole block when omitted");
    sub->add_option("--d", *d, "amount")->required();
    sub->callback([io, doc, rho, row, d, kind] {
      ExtendedMultiSegment in = ems_from_json(read_json_arg(*doc));
      SupercuspidalLabel label = parse_label(*rho);
      ExtendedMultiSegment out =
          *row < 0 ? block_surgery(in, label, *d, kind)
                   : row_surgery(in, label, *row, *d, kind);
      emit(io->format, out.str(), ems_to_json(out));
    });
  }
  {
    auto* sub = ems->add_subcommand("e-minus", "peel the first widest run");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    auto rho = std::make_shared<std::string>();
    sub->add_option("ems", *doc)->required();
    sub->add_option("--rho", *rho)->required();
    sub->callback([io, doc, rho] {
      EMinusResult res =
          e_minus(ems_from_json(read_json_arg(*doc)), parse_label(*rho));
      emit(io->format,
           "ems: " + res.ems.str() + "\nremoved: " + res.removed.str() +
               "\nr: " + std::to_string(res.r),
           json{{"ems", ems_to_json(res.ems)},
                {"removed", segment_to_json(res.removed)},
                {"r", res.r}});
    });
  }
  {
    auto* sub = ems->add_subcommand(
        "e-rho-minus", "peel every wide row at the least start");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    auto rho = std::make_shared<std::string>();
    sub->add_option("ems", *doc)->required();
    sub->add_option("--rho", *rho)->required();
    sub->callback([io, doc, rho] {
      ERhoMinusResult res =
          e_rho_minus(ems_from_json(read_json_arg(*doc)), parse_label(*rho));
      std::string text = "ems: " + res.ems.str() + "\nremoved:";
      for (const Segment& s : res.removed) text += " " + s.str();
      emit(io->format, text,
           json{{"ems", ems_to_json(res.ems)},
                {"removed", segments_to_json(res.removed)}});
    });
  }
  {
    auto* sub = ems->add_subcommand("e-plus-upper", "invert the widest peel");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    auto rho = std::make_shared<std::string>();
    auto x = std::make_shared<std::string>();
    auto y = std::make_shared<std::string>();
    auto r = std::make_shared<int>(1);
    sub->add_option("ems", *doc)->required();
    sub->add_option("--rho", *rho)->required();
    sub->add_option("--x", *x)->required();
    sub->add_option("--y", *y)->required();
    sub->add_option("--r", *r)->required();
    sub->callback([io, doc, rho, x, y, r] {
      EPlusUpperResult res =
          e_plus_upper(ems_from_json(read_json_arg(*doc)), parse_label(*rho),
                       parse_half(*x), parse_half(*y), *r);
      emit(io->format,
           "ems: " + res.ems.str() + "\nadded: " + yn(res.added),
           json{{"ems", ems_to_json(res.ems)}, {"added", res.added}});
    });
  }
  {
    auto* sub = ems->add_subcommand("e-plus-lower", "invert the start peel");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    auto rho = std::make_shared<std::string>();
    auto removed = std::make_shared<std::string>();
    sub->add_option("ems", *doc)->required();
    sub->add_option("--rho", *rho)->required();
    sub->add_option("--removed", *removed, "JSON array of segments")
        ->required();
    sub->callback([io, doc, rho, removed] {
      ExtendedMultiSegment out = e_plus_lower(
          ems_from_json(read_json_arg(*doc)), parse_label(*rho),
          segments_from_json(read_json_arg(*removed)));
      emit(io->format, out.str(), ems_to_json(out));
    });
  }

  auto* ldata = app.add_subcommand("ldata", "Langlands data operations");
  ldata->require_subcommand(1);
  {
    auto* sub = ldata->add_subcommand("show", "canonical form");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    sub->add_option("ldata", *doc, "JSON document, '-' or '@file'")->required();
    sub->callback([io, doc] {
      LanglandsData pi = ldata_from_json(read_json_arg(*doc));
      emit(io->format, pi.str(), ldata_to_json(pi));
    });
  }
  {
    auto* sub = ldata->add_subcommand(
        "reduce-upper", "strip the most-negative-shift segments");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    sub->add_option("ldata", *doc)->required();
    sub->callback([io, doc] {
      ReduceUpperResult res = reduce_upper(ldata_from_json(read_json_arg(*doc)));
      emit(io->format,
           "pi_minus: " + res.pi_minus.str() + "\nrho: " +
               print_label(res.rho) + "\nx: " + res.x.str() + "\ny: " +
               res.y.str() + "\nr: " + std::to_string(res.r),
           json{{"pi_minus", ldata_to_json(res.pi_minus)},
                {"rho", print_label(res.rho)},
                {"x", res.x.str()},
                {"y", res.y.str()},
                {"r", res.r}});
    });
  }
  {
    auto* sub = ldata->add_subcommand(
        "reduce-lower", "strip the least-start segments of the least label");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    sub->add_option("ldata", *doc)->required();
    sub->callback([io, doc] {
      ReduceLowerResult res = reduce_lower(ldata_from_json(read_json_arg(*doc)));
      std::string text = "pi_minus: " + res.pi_minus.str() + "\nremoved:";
      for (const Segment& s : res.removed) text += " " + s.str();
      text += "\nx_min: " + res.x_min.str();
      emit(io->format, text,
           json{{"pi_minus", ldata_to_json(res.pi_minus)},
                {"removed", segments_to_json(res.removed)},
                {"x_min", res.x_min.str()}});
    });
  }
  for (bool inserting : {true, false}) {
    auto* sub = ldata->add_subcommand(
        inserting ? "insert" : "remove",
        inserting ? "insert segments" : "remove segments");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    auto segs = std::make_shared<std::string>();
    sub->add_option("ldata", *doc)->required();
    sub->add_option("--segments", *segs, "JSON array of segments")->required();
    sub->callback([io, doc, segs, inserting] {
      LanglandsData pi = ldata_from_json(read_json_arg(*doc));
      std::vector<Segment> list = segments_from_json(read_json_arg(*segs));
      LanglandsData out =
          inserting ? insert_segments(pi, list) : remove_segments(pi, list);
      emit(io->format, out.str(), ldata_to_json(out));
    });
  }
  {
    auto* sub = ldata->add_subcommand(
        "max-b", "width bound of a parameter against L-data");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    auto param = std::make_shared<std::string>();
    sub->add_option("ldata", *doc)->required();
    sub->add_option("--param", *param, "Arthur parameter text")->required();
    sub->callback([io, doc, param] {
      MaxBReport rep = max_b_check(ldata_from_json(read_json_arg(*doc)),
                                   read_param(*param, io->group));
      emit(io->format,
           std::string("ok: ") + yn(rep.ok) +
               "\nequality: " + yn(rep.equality),
           json{{"ok", rep.ok}, {"equality", rep.equality}});
    });
  }
  {
    auto* sub = ldata->add_subcommand(
        "predicate-upper", "upper re-attachment requirements");
    auto io = add_io(sub);
    auto param = std::make_shared<std::string>();
    auto rho = std::make_shared<std::string>();
    auto x = std::make_shared<std::string>();
    auto y = std::make_shared<std::string>();
    auto r = std::make_shared<int>(1);
    sub->add_option("param", *param, "Arthur parameter text")->required();
    sub->add_option("--rho", *rho)->required();
    sub->add_option("--x", *x)->required();
    sub->add_option("--y", *y)->required();
    sub->add_option("--r", *r)->required();
    sub->callback([io, param, rho, x, y, r] {
      PredicateResult res =
          predicate_upper(read_param(*param, io->group), parse_label(*rho),
                          parse_half(*x), parse_half(*y), *r);
      json j{{"ok", res.ok}};
      std::string text = std::string("ok: ") + yn(res.ok);
      if (res.ok) {
        j["psi_plus"] = param_to_json(res.psi_plus);
        text += "\npsi_plus: " + print_parameter(res.psi_plus);
      } else {
        j["failed"] = res.failed;
        text += "\nfailed: " + res.failed;
      }
      emit(io->format, text, j);
    });
  }
  {
    auto* sub = ldata->add_subcommand(
        "predicate-lower", "lower re-attachment requirements");
    auto io = add_io(sub);
    auto param = std::make_shared<std::string>();
    auto removed = std::make_shared<std::string>();
    auto x_min = std::make_shared<std::string>();
    sub->add_option("param", *param, "Arthur parameter text")->required();
    sub->add_option("--removed", *removed, "JSON array of segments")
        ->required();
    sub->add_option("--x-min", *x_min)->required();
    sub->callback([io, param, removed, x_min] {
      PredicateResult res = predicate_lower(
          read_param(*param, io->group),
          segments_from_json(read_json_arg(*removed)), parse_half(*x_min));
      json j{{"ok", res.ok}};
      std::string text = std::string("ok: ") + yn(res.ok);
      if (res.ok) {
        j["psi_plus"] = param_to_json(res.psi_plus);
        text += "\npsi_plus: " + print_parameter(res.psi_plus);
      } else {
        j["failed"] = res.failed;
        text += "\nfailed: " + res.failed;
      }
      emit(io->format, text, j);
    });
  }
  {
    auto* sub = ldata->add_subcommand(
        "tempered-ems", "diagonal data of a tempered representation");
    auto io = add_io(sub);
    auto doc = std::make_shared<std::string>();
    sub->add_option("ldata", *doc)->required();
    sub->callback([io, doc] {
      ExtendedMultiSegment out =
          tempered_ems_of(ldata_from_json(read_json_arg(*doc)));
      emit(io->format, out.str(), ems_to_json(out));
    });
  }

  {
    auto* sub = app.add_subcommand("suite", "randomized verification suites");
    auto io = add_io(sub);
    auto name = std::make_shared<std::string>();
    auto seed = std::make_shared<uint64_t>(1);
    auto trials = std::make_shared<uint64_t>(1000);
    auto fixtures = std::make_shared<std::string>();
    auto list = std::make_shared<bool>(false);
    sub->add_option("name,--name", *name, "suite name");
    sub->add_option("--seed", *seed, "base seed");
    sub->add_option("--trials", *trials, "trial count (examples ignores it)");
    sub->add_option("--fixtures", *fixtures, "fixture corpus path");
    sub->add_flag("--list", *list, "list suite names");
    sub->callback([io, name, seed, trials, fixtures, list] {
      if (*list) {
        for (const std::string& n : suite_names()) std::cout << n << "\n";
        return;
      }
      if (name->empty())
        throw std::invalid_argument("suite name required (or --list)");
      SuiteReport rep = run_suite(*name, *seed, *trials, *fixtures);
      if (io->format == "json") {
        json j{{"suite", rep.name},
               {"seed", rep.seed},
               {"trials", rep.trials},
               {"failures", rep.failures},
               {"status", rep.pass() ? "pass" : "fail"}};
        if (!rep.pass()) {
          j["first_failure"] = rep.first_failure;
          j["counterexample"] = rep.first_counterexample;
        }
        std::cout << dump_json(j);
      } else {
        std::cout << "suite: " << rep.name << "\n";
        std::cout << "seed: " << rep.seed << "\n";
        std::cout << "trials: " << rep.trials << "\n";
        std::cout << "failures: " << rep.failures << "\n";
        std::cout << "status: " << (rep.pass() ? "pass" : "fail") << "\n";
        if (!rep.pass()) {
          std::cout << "first_failure: " << rep.first_failure << "\n";
          std::cout << "counterexample: " << rep.first_counterexample << "\n";
        }
        std::cerr << "elapsed_ms: " << rep.millis << "\n";
      }
      if (!rep.pass()) g_exit = 1;
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symbolic calculus for local Arthur parameters of Sp(2n) and "
      "SO(2n+1)"};
  build_app(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error at byte " << e.pos() << ": expected "
              << e.expected() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ToolkitError& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}
