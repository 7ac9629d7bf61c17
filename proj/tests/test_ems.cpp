#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "arthurlab/dsl.hpp"
#include "arthurlab/ems.hpp"
#include "arthurlab/errors.hpp"

using namespace arthurlab;

namespace {

HalfInt h(int twice) { return HalfInt::halves(twice); }

ExtendedMultiSegment ems_of(const std::string& group,
                            std::vector<ExtendedSegment> rows) {
  return make_ems(GroupSpec::parse(group), {{trivial_label(), std::move(rows)}});
}

// The worked chain: ([3,-3],3,+), ([1,-1],1,-), ([0,0],0,-).
ExtendedMultiSegment chain_top() {
  return ems_of("Sp:10", {make_extended_segment(h(6), h(-6), 3, 1),
                          make_extended_segment(h(2), h(-2), 1, -1),
                          make_extended_segment(h(0), h(0), 0, -1)});
}

}  // namespace

TEST_CASE("rows normalize and print") {
  ExtendedSegment row = make_extended_segment(h(6), h(-6), 3, 1);
  CHECK(row.width() == 7);
  CHECK(row.a() == 1);
  CHECK(row.str() == "([3,-3],l=3,+)");
  CHECK(make_extended_segment(h(2), h(-2), 1, -1).str() == "([1,-1],l=1,-)");

  // eta is immaterial at 2l == b and normalizes to +.
  ExtendedSegment mid = make_extended_segment(h(2), h(0), 1, -1);
  CHECK(mid.eta == 1);

  CHECK_THROWS_AS(make_extended_segment(h(0), h(2), 0, 1), ToolkitError);   // width < 1
  CHECK_THROWS_AS(make_extended_segment(h(2), h(0), 2, 1), ToolkitError);   // 2l > b
  CHECK_THROWS_AS(make_extended_segment(h(1), h(0), 0, 1), ToolkitError);   // mixed coset
}

TEST_CASE("multi-segment text form groups rows by label") {
  CHECK(chain_top().str() ==
        "Sp:10 { tr(1,O): ([3,-3],l=3,+) ([1,-1],l=1,-) ([0,0],l=0,-) }");
}

TEST_CASE("attached parameter reads (a,b) off each row") {
  CHECK(psi_of_ems(chain_top()) ==
        parse_parameter("Sp:10 = tr(1,O).S1.S1 + tr(1,O).S1.S3 + tr(1,O).S1.S7"));
  CHECK(psi_dim_of(chain_top()) == 11);
}

TEST_CASE("validation of the worked chain") {
  EmsValidation v = validate_ems(chain_top());
  CHECK(v.ok());
  CHECK(v.order_b_sorted);
  CHECK(v.sign == 1);
}

TEST_CASE("b-sorting is stronger than admissibility") {
  // Rows ([1,0],1,+) then ([2,-1],1,-): B drops while A rises, so no
  // admissibility constraint applies, but the block is not B-sorted.
  ExtendedMultiSegment e = ems_of("SO:13", {make_extended_segment(h(2), h(0), 1, 1),
                                            make_extended_segment(h(4), h(-2), 1, -1)});
  EmsValidation v = validate_ems(e);
  CHECK(v.order_admissible);
  CHECK(!v.order_b_sorted);
}

TEST_CASE("sign flips with the decoration") {
  ExtendedMultiSegment e = ems_of("Sp:4", {make_extended_segment(h(1), h(1), 0, 1),
                                           make_extended_segment(h(2), h(2), 0, -1)});
  // Row ([1/2,1/2],0,+): +1; row ([1,1],0,-): (-1)^0 * (-1)^1 = -1.
  CHECK(validate_ems(e).sign == -1);
}

TEST_CASE("row surgeries") {
  ExtendedMultiSegment e = chain_top();
  CHECK(row_surgery(e, trivial_label(), 0, 0, RowSurgery::Shift) == e);

  ExtendedMultiSegment shifted = row_surgery(e, trivial_label(), 1, 1, RowSurgery::Shift);
  CHECK(shifted.blocks[0].rows[1] == make_extended_segment(h(4), h(0), 1, -1));

  // add with d = -1 narrows the first row by one on each side.
  ExtendedMultiSegment narrowed = row_surgery(e, trivial_label(), 0, -1, RowSurgery::Add);
  CHECK(narrowed.blocks[0].rows[0] == make_extended_segment(h(4), h(-4), 2, 1));
  CHECK(narrowed.group.str() == "Sp:8");

  CHECK_THROWS_AS(row_surgery(e, trivial_label(), 2, -1, RowSurgery::Add), ToolkitError);
  CHECK_THROWS_AS(row_surgery(e, trivial_label(), 9, 1, RowSurgery::Shift), ToolkitError);
}

TEST_CASE("block surgery hits every row of the label") {
  ExtendedMultiSegment e = ems_of("SO:7", {make_extended_segment(h(1), h(1), 0, 1),
                                           make_extended_segment(h(3), h(3), 0, 1)});
  ExtendedMultiSegment moved = block_surgery(e, trivial_label(), 1, RowSurgery::Shift);
  CHECK(moved.blocks[0].rows[0] == make_extended_segment(h(3), h(3), 0, 1));
  CHECK(moved.blocks[0].rows[1] == make_extended_segment(h(5), h(5), 0, 1));
}

TEST_CASE("peeling the widest run") {
  EMinusResult res = e_minus(chain_top(), trivial_label());
  CHECK(res.r == 1);
  CHECK(res.removed.x == h(-6));
  CHECK(res.removed.y == h(6));
  CHECK(res.ems == ems_of("Sp:8", {make_extended_segment(h(4), h(-4), 2, 1),
                                   make_extended_segment(h(2), h(-2), 1, -1),
                                   make_extended_segment(h(0), h(0), 0, -1)}));
}

TEST_CASE("a duplicated widest row peels as one run") {
  ExtendedMultiSegment e = ems_of("SO:5", {make_extended_segment(h(1), h(-1), 1, 1),
                                           make_extended_segment(h(1), h(-1), 1, 1)});
  EMinusResult res = e_minus(e, trivial_label());
  CHECK(res.r == 2);
  CHECK(res.removed.x == h(-1));
  CHECK(res.removed.y == h(1));
  CHECK(res.ems.blocks.empty());
  CHECK(res.ems.group.str() == "SO:1");
}

TEST_CASE("peel preconditions") {
  ExtendedMultiSegment points = ems_of("SO:9", {make_extended_segment(h(2), h(2), 0, 1),
                                                make_extended_segment(h(4), h(4), 0, 1)});
  CHECK_THROWS_AS(e_minus(points, trivial_label()), ToolkitError);

  ExtendedMultiSegment unsorted = ems_of("SO:13",
      {make_extended_segment(h(2), h(0), 1, 1),
       make_extended_segment(h(4), h(-2), 1, 1)});
  CHECK_THROWS_AS(e_minus(unsorted, trivial_label()), ToolkitError);
}

TEST_CASE("peeling at the least starting point") {
  ERhoMinusResult res = e_rho_minus(chain_top(), trivial_label());
  REQUIRE(res.removed.size() == 1);
  CHECK(res.removed[0].x == h(-6));
  CHECK(res.removed[0].y == h(6));
  CHECK(res.ems == ems_of("Sp:8", {make_extended_segment(h(4), h(-4), 2, 1),
                                   make_extended_segment(h(2), h(-2), 1, -1),
                                   make_extended_segment(h(0), h(0), 0, -1)}));

  ExtendedMultiSegment lzero = ems_of("Sp:4", {make_extended_segment(h(2), h(0), 0, 1),
                                               make_extended_segment(h(0), h(0), 0, -1)});
  CHECK_THROWS_AS(e_rho_minus(lzero, trivial_label()), ToolkitError);
}

TEST_CASE("re-attaching what was peeled") {
  ExtendedMultiSegment top = chain_top();

  EMinusResult down = e_minus(top, trivial_label());
  EPlusUpperResult up = e_plus_upper(down.ems, trivial_label(), down.removed.x,
                                     down.removed.y, down.r);
  CHECK(up.ems == top);
  CHECK(up.added);  // rows were widened, not inserted

  ERhoMinusResult rdown = e_rho_minus(top, trivial_label());
  CHECK(e_plus_lower(rdown.ems, trivial_label(), rdown.removed) == top);

  // r = 0 is the identity.
  EPlusUpperResult same = e_plus_upper(top, trivial_label(), h(-6), h(6), 0);
  CHECK(same.ems == top);
  CHECK(!same.added);
}

TEST_CASE("gap-free re-attachment inserts fresh point rows") {
  ExtendedMultiSegment diag = ems_of("SO:13", {make_extended_segment(h(1), h(1), 0, 1),
                                               make_extended_segment(h(3), h(3), 0, 1),
                                               make_extended_segment(h(5), h(5), 0, 1)});
  EPlusUpperResult up = e_plus_upper(diag, trivial_label(), h(3), h(5), 1);
  CHECK(!up.added);
  CHECK(up.ems == ems_of("SO:23", {make_extended_segment(h(1), h(1), 0, 1),
                                   make_extended_segment(h(3), h(3), 0, 1),
                                   make_extended_segment(h(5), h(3), 1, 1),
                                   make_extended_segment(h(5), h(5), 0, 1)}));
}

TEST_CASE("re-attachment preconditions") {
  ExtendedMultiSegment top = chain_top();
  CHECK_THROWS_AS(e_plus_upper(top, trivial_label(), h(-6), h(6), -1), ToolkitError);
  // No row matches [y-1, x+1] = [5/2, -5/2] in the half-integral coset.
  CHECK_THROWS_AS(e_plus_upper(top, trivial_label(), h(-7), h(7), 1), ToolkitError);
}

TEST_CASE("the diagonal parameter flips to the antidiagonal one") {
  ExtendedMultiSegment diag = ems_of("SO:13", {make_extended_segment(h(1), h(1), 0, 1),
                                               make_extended_segment(h(3), h(3), 0, 1),
                                               make_extended_segment(h(5), h(5), 0, 1)});
  ExtendedMultiSegment anti = dual_tempered_ems(diag);
  CHECK(anti == ems_of("SO:13", {make_extended_segment(h(5), h(-5), 3, 1),
                                 make_extended_segment(h(3), h(-3), 2, 1),
                                 make_extended_segment(h(1), h(-1), 1, 1)}));
  CHECK(psi_of_ems(anti) ==
        parse_parameter("SO:13 = tr(1,O).S1.S2 + tr(1,O).S1.S4 + tr(1,O).S1.S6"));

  ExtendedMultiSegment minus = ems_of("Sp:2", {make_extended_segment(h(2), h(2), 0, -1)});
  CHECK_THROWS_AS(dual_tempered_ems(minus), ToolkitError);
}
