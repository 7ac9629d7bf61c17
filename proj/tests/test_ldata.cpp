#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "arthurlab/dsl.hpp"
#include "arthurlab/errors.hpp"
#include "arthurlab/ldata.hpp"

using namespace arthurlab;

namespace {

HalfInt h(int twice) { return HalfInt::halves(twice); }

Segment seg(int x2, int y2) { return make_segment(trivial_label(), h(x2), h(y2)); }

// L(D[-3,-3], D[-1,-2], D[0,-1]; pi(tr[0]+)) on Sp:10.
LanglandsData chain_top() {
  return make_langlands_data(GroupSpec::parse("Sp:10"),
                             {seg(-6, 6), seg(-2, 4), seg(0, 2)},
                             {{trivial_label(), 1, 1}});
}

}  // namespace

TEST_CASE("segments store their printed endpoints") {
  Segment s = seg(-6, 6);
  CHECK(s.length() == 1);
  CHECK(s.dim() == 1);
  CHECK(s.str() == "D(tr(1,O))[-3,-3]");
  CHECK(seg(-1, 5).str() == "D(tr(1,O))[-1/2,-5/2]");
  CHECK(seg(-1, 5).length() == 3);
  CHECK_THROWS_AS(make_segment(trivial_label(), h(0), h(-2)), ToolkitError);
  CHECK_THROWS_AS(make_segment(trivial_label(), h(0), h(1)), ToolkitError);
}

TEST_CASE("data text form and dimension") {
  LanglandsData pi = chain_top();
  CHECK(pi.str() ==
        "L(D(tr(1,O))[-3,-3], D(tr(1,O))[-1,-2], D(tr(1,O))[0,-1]; pi(tr(1,O)[0]+))");
  CHECK(pi.dim() == 11);

  LanglandsData tempered = make_langlands_data(GroupSpec::parse("Sp:4"), {},
                                               {{trivial_label(), 5, 1}});
  CHECK(tempered.str() == "L(; pi(tr(1,O)[2]+))");
  CHECK(tempered.dim() == 5);

  LanglandsData minus = make_langlands_data(GroupSpec::parse("SO:3"), {},
                                            {{trivial_label(), 2, -1}});
  CHECK(minus.str() == "L(; pi(tr(1,O)[1/2]-))");
}

TEST_CASE("canonical order sorts by drop, then label, then start") {
  LanglandsData pi = make_langlands_data(GroupSpec::parse("Sp:10"),
                                         {seg(0, 2), seg(-6, 6), seg(-2, 4)},
                                         {{trivial_label(), 1, 1}});
  CHECK(pi == chain_top());
  CHECK(pi.segments.front() == seg(-6, 6));
}

TEST_CASE("segments of the data must be strictly negative") {
  CHECK_THROWS_AS(make_langlands_data(GroupSpec::parse("Sp:4"),
                                      {make_segment(trivial_label(), h(2), h(2))},
                                      {}),
                  ToolkitError);
}

TEST_CASE("stripping the front segment") {
  ReduceUpperResult res = reduce_upper(chain_top());
  CHECK(res.rho == trivial_label());
  CHECK(res.x == h(-6));
  CHECK(res.y == h(6));
  CHECK(res.r == 1);
  CHECK(res.pi_minus ==
        make_langlands_data(GroupSpec::parse("Sp:8"), {seg(-2, 4), seg(0, 2)},
                            {{trivial_label(), 1, 1}}));

  LanglandsData tempered = make_langlands_data(GroupSpec::parse("Sp:4"), {},
                                               {{trivial_label(), 5, 1}});
  CHECK_THROWS_AS(reduce_upper(tempered), ToolkitError);
}

TEST_CASE("the front strip counts exact copies only") {
  LanglandsData pi = make_langlands_data(GroupSpec::parse("Sp:8"),
                                         {seg(-6, 6), seg(-6, 6), seg(0, 2)},
                                         {{trivial_label(), 1, 1}});
  ReduceUpperResult res = reduce_upper(pi);
  CHECK(res.r == 2);
  CHECK(res.pi_minus.group.str() == "Sp:4");
  CHECK(res.pi_minus.segments.size() == 1);
}

TEST_CASE("stripping every segment at the least start") {
  LanglandsData pi = make_langlands_data(
      GroupSpec::parse("SO:31"), {seg(-1, 5), seg(-1, 1), seg(3, 5)},
      {{trivial_label(), 2, 1}, {trivial_label(), 4, 1}, {trivial_label(), 6, 1}});
  ReduceLowerResult res = reduce_lower(pi);
  CHECK(res.rho == trivial_label());
  CHECK(res.x_min == h(-1));
  REQUIRE(res.removed.size() == 2);
  CHECK(res.removed[0] == seg(-1, 5));
  CHECK(res.removed[1] == seg(-1, 1));
  CHECK(res.pi_minus.group.str() == "SO:23");
  CHECK(res.pi_minus.segments == std::vector<Segment>{seg(3, 5)});
}

TEST_CASE("inserting and removing segments") {
  LanglandsData pi = chain_top();
  ReduceUpperResult res = reduce_upper(pi);
  std::vector<Segment> back(res.r, make_segment(res.rho, res.x, res.y));
  CHECK(insert_segments(res.pi_minus, back) == pi);
  CHECK(remove_segments(pi, back) == res.pi_minus);
  CHECK_THROWS_AS(remove_segments(pi, {seg(-8, 8)}), ToolkitError);
}

TEST_CASE("segment-width bound against a parameter") {
  LanglandsData pi = make_langlands_data(GroupSpec::parse("Sp:8"),
                                         {seg(-2, 4), seg(0, 2)},
                                         {{trivial_label(), 1, 1}});
  MaxBReport rep = max_b_check(
      pi, parse_parameter("Sp:8 = tr(1,O).S1.S1 + tr(1,O).S1.S3 + tr(1,O).S1.S5"));
  CHECK(rep.ok);
  CHECK(!rep.equality);

  MaxBReport tight = max_b_check(
      chain_top(),
      parse_parameter("Sp:10 = tr(1,O).S1.S1 + tr(1,O).S1.S3 + tr(1,O).S1.S7"));
  CHECK(tight.ok);
  CHECK(tight.equality);

  // Every summand too narrow for the deepest segment drop.
  MaxBReport narrow = max_b_check(pi, parse_parameter("Sp:8 = tr(1,O).S9.S1"));
  CHECK(!narrow.ok);
}

TEST_CASE("growth requirements for re-attaching a wide segment") {
  LocalArthurParameter psi =
      parse_parameter("SO:13 = tr(1,O).S2.S1 + tr(1,O).S4.S1 + tr(1,O).S6.S1");
  PredicateResult res = predicate_upper(psi, trivial_label(), h(3), h(5), 1);
  CHECK(res.ok);
  CHECK(res.failed.empty());
  CHECK(res.psi_plus ==
        parse_parameter("SO:23 = tr(1,O).S2.S1 + tr(1,O).S4.S1 + tr(1,O).S5.S2 + tr(1,O).S6.S1"));

  // Missing the narrow summand S3 (x) S2.
  LocalArthurParameter bad =
      parse_parameter("SO:25 = tr(1,O).S1.S2 + tr(1,O).S2.S1 + 2*tr(1,O).S5.S2");
  PredicateResult rej = predicate_upper(bad, trivial_label(), h(-1), h(5), 1);
  CHECK(!rej.ok);
  CHECK(!rej.failed.empty());
}

TEST_CASE("growth requirements for re-attaching the least-start multiset") {
  std::vector<Segment> removed{seg(-1, 5), seg(-1, 1)};
  LocalArthurParameter psi =
      parse_parameter("SO:23 = tr(1,O).S3.S2 + tr(1,O).S5.S2 + tr(1,O).S6.S1");
  PredicateResult res = predicate_lower(psi, removed, h(-1));
  CHECK(res.ok);
  CHECK(res.psi_plus ==
        parse_parameter("SO:31 = tr(1,O).S1.S2 + tr(1,O).S3.S4 + tr(1,O).S5.S2 + tr(1,O).S6.S1"));

  LocalArthurParameter bad =
      parse_parameter("SO:23 = tr(1,O).S2.S1 + 2*tr(1,O).S5.S2");
  CHECK(!predicate_lower(bad, removed, h(-1)).ok);

  PredicateResult trivial = predicate_lower(psi, {}, h(0));
  CHECK(trivial.ok);
  CHECK(trivial.psi_plus == psi);
}

TEST_CASE("tempered data own a diagonal multi-segment") {
  LanglandsData tempered = make_langlands_data(
      GroupSpec::parse("SO:13"), {},
      {{trivial_label(), 2, 1}, {trivial_label(), 4, 1}, {trivial_label(), 6, 1}});
  ExtendedMultiSegment diag = tempered_ems_of(tempered);
  REQUIRE(diag.blocks.size() == 1);
  REQUIRE(diag.blocks[0].rows.size() == 3);
  CHECK(diag.blocks[0].rows[0] == make_extended_segment(h(1), h(1), 0, 1));
  CHECK(diag.blocks[0].rows[2] == make_extended_segment(h(5), h(5), 0, 1));
  CHECK(psi_of_ems(diag) ==
        parse_parameter("SO:13 = tr(1,O).S2.S1 + tr(1,O).S4.S1 + tr(1,O).S6.S1"));

  CHECK_THROWS_AS(tempered_ems_of(chain_top()), ToolkitError);
}

TEST_CASE("sign characters survive into the diagonal rows") {
  LanglandsData tempered = make_langlands_data(
      GroupSpec::parse("SO:7"), {},
      {{trivial_label(), 2, 1}, {trivial_label(), 4, -1}});
  ExtendedMultiSegment diag = tempered_ems_of(tempered);
  CHECK(diag.blocks[0].rows[0].eta == 1);
  CHECK(diag.blocks[0].rows[1].eta == -1);
}
