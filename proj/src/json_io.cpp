#include "arthurlab/json_io.hpp"

#include "arthurlab/dsl.hpp"
#include "arthurlab/errors.hpp"

namespace arthurlab {

json label_to_json(const SupercuspidalLabel& rho) {
  if (!rho.self_dual())
    fail(Errc::InvariantBroken,
         "only self-dual labels have a JSON form: " + print_label(rho));
  return json{{"name", rho.name},
              {"dim", rho.dim},
              {"type", std::string(1, selfdual_type_char(rho.type))}};
}

SupercuspidalLabel label_from_json(const json& j) {
  SupercuspidalLabel rho;
  rho.name = j.at("name").get<std::string>();
  rho.dim = j.at("dim").get<int>();
  std::string type = j.at("type").get<std::string>();
  if (rho.name.empty() || rho.dim < 1 || (type != "O" && type != "S"))
    fail(Errc::InvariantBroken, "bad label " + j.dump());
  rho.type = type == "O" ? SelfdualType::Orthogonal : SelfdualType::Symplectic;
  return rho;
}

json param_to_json(const LocalArthurParameter& psi) {
  json summands = json::array();
  for (const auto& s : psi.summands)
    summands.push_back(
        json{{"rho", label_to_json(s.rho)}, {"a", s.a}, {"b", s.b}});
  return json{{"group", psi.group.str()}, {"summands", std::move(summands)}};
}

LocalArthurParameter param_from_json(const json& j) {
  GroupSpec group = GroupSpec::parse(j.at("group").get<std::string>());
  std::vector<ArthurSummand> summands;
  for (const auto& js : j.at("summands"))
    summands.push_back(ArthurSummand{label_from_json(js.at("rho")),
                                     js.at("a").get<int>(),
                                     js.at("b").get<int>()});
  return make_parameter(group, std::move(summands));
}

json lparam_to_json(const LocalLParameter& phi) {
  json summands = json::array();
  for (const auto& s : phi.summands)
    summands.push_back(
        json{{"rho", label_to_json(s.rho)}, {"x", s.x.str()}, {"a", s.a}});
  return json{{"group", phi.group.str()}, {"summands", std::move(summands)}};
}

LocalLParameter lparam_from_json(const json& j) {
  GroupSpec group = GroupSpec::parse(j.at("group").get<std::string>());
  std::vector<LSummand> summands;
  for (const auto& js : j.at("summands"))
    summands.push_back(LSummand{label_from_json(js.at("rho")),
                                parse_half(js.at("x").get<std::string>()),
                                js.at("a").get<int>()});
  return make_l_parameter(group, std::move(summands));
}

json ems_to_json(const ExtendedMultiSegment& ems) {
  json blocks = json::array();
  for (const auto& block : ems.blocks) {
    json rows = json::array();
    for (const auto& row : block.rows)
      rows.push_back(json{{"A", row.A.str()},
                          {"B", row.B.str()},
                          {"l", row.l},
                          {"eta", row.eta}});
    blocks.push_back(
        json{{"rho", label_to_json(block.rho)}, {"rows", std::move(rows)}});
  }
  return json{{"group", ems.group.str()}, {"blocks", std::move(blocks)}};
}

ExtendedMultiSegment ems_from_json(const json& j) {
  GroupSpec group = GroupSpec::parse(j.at("group").get<std::string>());
  std::vector<EmsBlock> blocks;
  for (const auto& jb : j.at("blocks")) {
    EmsBlock block;
    block.rho = label_from_json(jb.at("rho"));
    for (const auto& jr : jb.at("rows"))
      block.rows.push_back(make_extended_segment(
          parse_half(jr.at("A").get<std::string>()),
          parse_half(jr.at("B").get<std::string>()), jr.at("l").get<int>(),
          jr.at("eta").get<int>()));
    blocks.push_back(std::move(block));
  }
  return make_ems(group, std::move(blocks));
}

json segment_to_json(const Segment& s) {
  return json{{"rho", label_to_json(s.rho)}, {"x", s.x.str()}, {"y", s.y.str()}};
}

Segment segment_from_json(const json& j) {
  return make_segment(label_from_json(j.at("rho")),
                      parse_half(j.at("x").get<std::string>()),
                      parse_half(j.at("y").get<std::string>()));
}

json segments_to_json(const std::vector<Segment>& segs) {
  json out = json::array();
  for (const auto& s : segs) out.push_back(segment_to_json(s));
  return out;
}

std::vector<Segment> segments_from_json(const json& j) {
  std::vector<Segment> out;
  for (const auto& js : j) out.push_back(segment_from_json(js));
  return out;
}

json ldata_to_json(const LanglandsData& pi) {
  json segments = json::array();
  for (const auto& s : pi.segments) segments.push_back(segment_to_json(s));
  json tempered = json::array();
  for (const auto& e : pi.tempered)
    tempered.push_back(
        json{{"rho", label_to_json(e.rho)}, {"a", e.a}, {"sign", e.sign}});
  return json{{"group", pi.group.str()},
              {"segments", std::move(segments)},
              {"tempered", std::move(tempered)}};
}

LanglandsData ldata_from_json(const json& j) {
  GroupSpec group = GroupSpec::parse(j.at("group").get<std::string>());
  std::vector<Segment> segments;
  for (const auto& js : j.at("segments"))
    segments.push_back(segment_from_json(js));
  std::vector<TemperedEntry> tempered;
  for (const auto& je : j.at("tempered"))
    tempered.push_back(TemperedEntry{label_from_json(je.at("rho")),
                                     je.at("a").get<int>(),
                                     je.at("sign").get<int>()});
  return make_langlands_data(group, std::move(segments), std::move(tempered));
}

json triangle_to_json(const RankTriangle& t) { return json(t.str()); }

RankTriangle triangle_from_json(const json& j) {
  return RankTriangle::parse(j.get<std::string>());
}

json descriptor_to_json(const OperatorDescriptor& op) {
  json j{{"kind", operator_kind_name(op.kind)}, {"rho", label_to_json(op.rho)}};
  j["i"] = op.i;
  j["j"] = op.j;
  return j;
}

json validation_to_json(const ValidationReport& rep) {
  return json{{"ok", rep.ok()},
              {"dimension_ok", rep.dimension_ok},
              {"all_good_parity", rep.all_good_parity},
              {"summand_good_parity", rep.summand_good_parity},
              {"notes", rep.notes}};
}

json ems_validation_to_json(const EmsValidation& rep) {
  return json{{"ok", rep.ok()},
              {"row_ranges_ok", rep.row_ranges_ok},
              {"order_admissible", rep.order_admissible},
              {"order_b_sorted", rep.order_b_sorted},
              {"sign_ok", rep.sign_ok},
              {"psi_good_parity", rep.psi_good_parity},
              {"dimension_ok", rep.dimension_ok},
              {"sign", rep.sign},
              {"notes", rep.notes}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace arthurlab
