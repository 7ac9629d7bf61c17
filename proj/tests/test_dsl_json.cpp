#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "arthurlab/dsl.hpp"
#include "arthurlab/errors.hpp"
#include "arthurlab/json_io.hpp"

using namespace arthurlab;

TEST_CASE("half-integer text round trips") {
  for (const char* text : {"0", "3", "-2", "1/2", "-5/2", "17/2"})
    CHECK(print_half(parse_half(text)) == text);
  CHECK(parse_half(" 3/2 ") == HalfInt::halves(3));
  CHECK_THROWS_AS(parse_half(""), ParseError);
  CHECK_THROWS_AS(parse_half("2/3"), ParseError);
}

TEST_CASE("label text round trips") {
  CHECK(print_label(trivial_label()) == "tr(1,O)");
  CHECK(parse_label("tr(1,O)") == trivial_label());
  SupercuspidalLabel u{"u2", 2, SelfdualType::Symplectic, ""};
  CHECK(parse_label(print_label(u)) == u);
  CHECK_THROWS_AS(parse_label("tr(0,O)"), ParseError);
  CHECK_THROWS_AS(parse_label("tr(1,X)"), ParseError);
}

TEST_CASE("parameter text is byte-stable") {
  std::vector<std::string> texts{
      "SO:9 = 2*tr(1,O).S2.S1 + tr(1,O).S4.S1",
      "SO:9 = tr(1,O).S1.S2 + tr(1,O).S2.S1 + tr(1,O).S4.S1",
      "Sp:10 = tr(1,O).S1.S1 + tr(1,O).S1.S3 + tr(1,O).S1.S7",
      "SO:25 = 2*tr(1,O).S1.S2 + 2*tr(1,O).S5.S2",
      "Sp:0 = tr(1,O).S1.S1",
  };
  for (const auto& text : texts)
    CHECK(print_parameter(parse_parameter(text)) == text);
}

TEST_CASE("parameter parsing ignores whitespace and merges repeats") {
  LocalArthurParameter psi =
      parse_parameter("  SO:9=tr(1,O).S4.S1+ tr(1,O) . S2 . S1 +tr(1,O).S2.S1 ");
  CHECK(print_parameter(psi) == "SO:9 = 2*tr(1,O).S2.S1 + tr(1,O).S4.S1");
}

TEST_CASE("parameter parse errors carry a position") {
  CHECK_THROWS_AS(parse_parameter(""), ParseError);
  CHECK_THROWS_AS(parse_parameter("SO:9"), ParseError);
  CHECK_THROWS_AS(parse_parameter("SO:9 = tr(1,O).S2"), ParseError);
  CHECK_THROWS_AS(parse_parameter("SO:9 = tr(1,O).S0.S1"), ParseError);
  try {
    parse_parameter("SO:9 = tr(1,O).S2.S1 %");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos() > 0);
    CHECK(!e.expected().empty());
  }
}

TEST_CASE("L-parameter text is byte-stable") {
  std::vector<std::string> texts{
      "SO:9 = tr(1,O)[-3/2].S1 + tr(1,O)[-1/2].S1 + 2*tr(1,O)[0].S2 + tr(1,O)[1/2].S1 + tr(1,O)[3/2].S1",
      "Sp:10 = tr(1,O)[0].S11",
      "SO:1 = 0",
  };
  for (const auto& text : texts)
    CHECK(print_l_parameter(parse_l_parameter(text)) == text);

  LocalLParameter phi = phi_of(parse_parameter("SO:5 = tr(1,O).S1.S4"));
  CHECK(parse_l_parameter(print_l_parameter(phi)) == phi);
}

TEST_CASE("parameter json round trips") {
  LocalArthurParameter psi =
      parse_parameter("SO:9 = 2*tr(1,O).S2.S1 + tr(1,O).S4.S1");
  json j = param_to_json(psi);
  CHECK(j.at("group") == "SO:9");
  CHECK(j.at("summands").size() == 3);
  CHECK(j.at("summands")[0].at("a") == 2);
  CHECK(param_from_json(j) == psi);
  CHECK(param_to_json(param_from_json(j)) == j);
}

TEST_CASE("l-parameter json keeps exponents as strings") {
  LocalLParameter phi = phi_of(parse_parameter("SO:5 = tr(1,O).S1.S4"));
  json j = lparam_to_json(phi);
  CHECK(j.at("summands")[0].at("x").is_string());
  CHECK(lparam_from_json(j) == phi);
}

TEST_CASE("multi-segment json round trips") {
  ExtendedMultiSegment ems = make_ems(
      GroupSpec::parse("Sp:10"),
      {{trivial_label(),
        {make_extended_segment(HalfInt::whole(3), HalfInt::whole(-3), 3, 1),
         make_extended_segment(HalfInt::whole(1), HalfInt::whole(-1), 1, -1),
         make_extended_segment(HalfInt::whole(0), HalfInt::whole(0), 0, -1)}}});
  json j = ems_to_json(ems);
  CHECK(j.at("blocks")[0].at("rows")[0].at("A") == "3");
  CHECK(j.at("blocks")[0].at("rows")[0].at("eta") == 1);
  CHECK(ems_from_json(j) == ems);
  CHECK(ems_to_json(ems_from_json(j)) == j);
}

TEST_CASE("segment and data json round trips") {
  Segment s = make_segment(trivial_label(), HalfInt::halves(-1), HalfInt::halves(5));
  json js = segment_to_json(s);
  CHECK(js.at("x") == "-1/2");
  CHECK(segment_from_json(js) == s);

  std::vector<Segment> segs{s, make_segment(trivial_label(), HalfInt::halves(3), HalfInt::halves(5))};
  CHECK(segments_from_json(segments_to_json(segs)) == segs);

  LanglandsData pi = make_langlands_data(GroupSpec::parse("SO:31"), segs,
                                         {{trivial_label(), 2, 1},
                                          {trivial_label(), 4, 1},
                                          {trivial_label(), 6, -1}});
  json jp = ldata_to_json(pi);
  CHECK(jp.at("tempered")[2].at("sign") == -1);
  CHECK(ldata_from_json(jp) == pi);
  CHECK(ldata_to_json(ldata_from_json(jp)) == jp);
}

TEST_CASE("triangles travel as their text form") {
  RankTriangle t = RankTriangle::parse("1 1 1 / 3 1 / 1");
  json j = triangle_to_json(t);
  CHECK(j.is_string());
  CHECK(triangle_from_json(j) == t);
}

TEST_CASE("non-self-dual labels have no serial form") {
  SupercuspidalLabel u{"u", 2, SelfdualType::Symplectic, "ubar"};
  CHECK_THROWS_AS(label_to_json(u), ToolkitError);
  json j{{"name", "tr"}, {"dim", 1}, {"type", "O"}};
  CHECK(label_from_json(j) == trivial_label());
}

TEST_CASE("dumped json ends with a newline and uses two-space indent") {
  json j{{"a", 1}};
  std::string text = dump_json(j);
  CHECK(text.back() == '\n');
  CHECK(text.find("  \"a\": 1") != std::string::npos);
}
