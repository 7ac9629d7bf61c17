#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "arthurlab/dsl.hpp"
#include "arthurlab/errors.hpp"
#include "arthurlab/l_param.hpp"
#include "arthurlab/vogan.hpp"

using namespace arthurlab;

namespace {

std::vector<HalfInt> grid_half_integers() {
  return {HalfInt::halves(-3), HalfInt::halves(-1), HalfInt::halves(1),
          HalfInt::halves(3)};
}

}  // namespace

TEST_CASE("triangle storage and text form") {
  RankTriangle t = RankTriangle::zero(3);
  CHECK(t.str() == "0 0 0 / 0 0 / 0");
  t.entry_ref(1, 1) = 1;
  t.entry_ref(1, 2) = 1;
  t.entry_ref(1, 3) = 1;
  t.entry_ref(2, 2) = 3;
  t.entry_ref(2, 3) = 1;
  t.entry_ref(3, 3) = 1;
  CHECK(t.str() == "1 1 1 / 3 1 / 1");
  CHECK(t.entry(2, 2) == 3);
  CHECK(RankTriangle::parse("1 1 1 / 3 1 / 1") == t);
  CHECK(RankTriangle::zero(0).str() == ".");
  CHECK(RankTriangle::parse(".") == RankTriangle::zero(0));
}

TEST_CASE("triangle sums and comparisons are entrywise") {
  RankTriangle a = RankTriangle::parse("1 0 / 0");
  RankTriangle b = RankTriangle::parse("0 1 / 0");
  CHECK((a + b).str() == "1 1 / 0");
  CHECK(triangle_compare(a, a) == OrderResult::Equal);
  CHECK(triangle_compare(a + b, a) == OrderResult::Greater);
  CHECK(triangle_compare(a, b) == OrderResult::Incomparable);
  CHECK_THROWS_AS(triangle_compare(a, RankTriangle::zero(3)), ToolkitError);
}

TEST_CASE("grids must increase strictly") {
  check_grid(grid_half_integers());
  CHECK_THROWS_AS(check_grid({HalfInt::whole(1), HalfInt::whole(1)}), ToolkitError);
  CHECK_THROWS_AS(check_grid({HalfInt::whole(1), HalfInt::whole(0)}), ToolkitError);
}

TEST_CASE("single-summand matrices over the worked grid") {
  auto grid = grid_half_integers();
  CHECK(m_matrix(HalfInt::whole(0), 2, grid).str() == "0 0 0 / 1 0 / 0");
  CHECK(m_matrix(HalfInt::halves(1), 3, grid).str() == "0 0 0 / 1 1 / 1");
  CHECK(m_matrix(HalfInt::halves(-1), 3, grid).str() == "1 1 0 / 1 0 / 0");
  CHECK(m_matrix(HalfInt::whole(0), 1, grid) == RankTriangle::zero(3));
}

TEST_CASE("block triangles add the summand matrices") {
  UnramifiedBlock block;
  block.grid = grid_half_integers();
  block.summands = {{HalfInt::halves(-1), 3}, {HalfInt::halves(1), 3}};
  RankTriangle t = rank_triangle(block);
  CHECK(t == m_matrix(HalfInt::halves(-1), 3, block.grid) +
                 m_matrix(HalfInt::halves(1), 3, block.grid));
}

TEST_CASE("closed form matches the window rule") {
  CHECK(rank_entry_closed_form(HalfInt::whole(1), HalfInt::whole(0),
                               HalfInt::whole(1), HalfInt::whole(0)) == 1);
  CHECK(rank_entry_closed_form(HalfInt::whole(1), HalfInt::whole(0),
                               HalfInt::whole(2), HalfInt::whole(-2)) == 0);
}

TEST_CASE("unramified reduction splits by label and checks the grid") {
  LocalLParameter phi = phi_of(parse_parameter("SO:9 = 2*tr(1,O).S2.S1 + tr(1,O).S4.S1"));
  auto blocks = unramified_reduction(phi);
  REQUIRE(blocks.size() == 1);
  const UnramifiedBlock& block = blocks.begin()->second;
  CHECK(block.grid == grid_half_integers());
  CHECK(rank_triangle(block).str() == "1 1 1 / 3 1 / 1");
}

TEST_CASE("grid gaps larger than one are allowed") {
  LocalLParameter phi = make_l_parameter(
      GroupSpec::parse("SO:3"),
      {{trivial_label(), HalfInt::whole(-1), 1}, {trivial_label(), HalfInt::whole(1), 1}});
  auto blocks = unramified_reduction(phi);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks.begin()->second.grid.size() == 2);
}

TEST_CASE("asymmetric exponent sets are rejected") {
  LocalLParameter phi = make_l_parameter(
      GroupSpec::parse("SO:3"),
      {{trivial_label(), HalfInt::whole(0), 1}, {trivial_label(), HalfInt::whole(1), 1}});
  CHECK_THROWS_AS(unramified_reduction(phi), ToolkitError);
}

TEST_CASE("worked family triangles through the full pipeline") {
  auto triangle_of = [](const std::string& text) {
    auto blocks = unramified_reduction(phi_of(parse_parameter(text)));
    REQUIRE(blocks.size() == 1);
    return rank_triangle(blocks.begin()->second).str();
  };
  CHECK(triangle_of("SO:9 = 2*tr(1,O).S2.S1 + tr(1,O).S4.S1") == "1 1 1 / 3 1 / 1");
  CHECK(triangle_of("SO:9 = tr(1,O).S1.S2 + tr(1,O).S2.S1 + tr(1,O).S4.S1") ==
        "1 1 1 / 2 1 / 1");
  CHECK(triangle_of("SO:9 = tr(1,O).S2.S1 + tr(1,O).S3.S2") == "1 1 0 / 3 1 / 1");
  CHECK(triangle_of("SO:9 = tr(1,O).S1.S2 + tr(1,O).S3.S2") == "1 1 0 / 2 1 / 1");
}

TEST_CASE("closure comparison combines the blocks") {
  LocalLParameter a = phi_of(parse_parameter("SO:9 = 2*tr(1,O).S2.S1 + tr(1,O).S4.S1"));
  LocalLParameter b = phi_of(parse_parameter("SO:9 = tr(1,O).S1.S2 + tr(1,O).S3.S2"));
  CHECK(closure_compare(a, b) == OrderResult::Greater);
  CHECK(closure_compare(b, a) == OrderResult::Less);
  CHECK(closure_compare(a, a) == OrderResult::Equal);

  LocalLParameter c = phi_of(parse_parameter("SO:9 = tr(1,O).S1.S8"));
  CHECK_THROWS_AS(closure_compare(a, c), ToolkitError);
}

TEST_CASE("cancelling the common summands") {
  LocalLParameter a = phi_of(parse_parameter("SO:9 = 2*tr(1,O).S2.S1 + tr(1,O).S4.S1"));
  auto [ra, rb] = cancel_common(a, a);
  CHECK(ra.summands.empty());
  CHECK(rb.summands.empty());
}

TEST_CASE("partitions recovered from triangles") {
  CHECK(partition_from_triangle(RankTriangle::zero(2), 5).str() == "[1,1,1,1,1]");

  auto blocks = unramified_reduction(phi_of(parse_parameter("SO:9 = 2*tr(1,O).S2.S1 + tr(1,O).S4.S1")));
  RankTriangle t = rank_triangle(blocks.begin()->second);
  CHECK(partition_from_triangle(t, 8).str() == "[4,2,2]");

  CHECK_THROWS_AS(partition_from_triangle(RankTriangle::parse("3"), 1), ToolkitError);
}
