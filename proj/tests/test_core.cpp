#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "arthurlab/arthur_param.hpp"
#include "arthurlab/dsl.hpp"
#include "arthurlab/errors.hpp"
#include "arthurlab/l_param.hpp"

using namespace arthurlab;

namespace {

LocalArthurParameter param(const std::string& text) {
  return parse_parameter(text);
}

}  // namespace

TEST_CASE("summand coordinates") {
  ArthurSummand s{trivial_label(), 3, 2};
  CHECK(s.A() == HalfInt::halves(3));
  CHECK(s.B() == HalfInt::halves(1));
  CHECK(s.dim() == 6);
  CHECK(ArthurSummand::from_AB(trivial_label(), s.A(), s.B()) == s);
}

TEST_CASE("parameters canonicalize their summand multiset") {
  LocalArthurParameter psi = make_parameter(
      GroupSpec::parse("SO:9"),
      {{trivial_label(), 4, 1}, {trivial_label(), 2, 1}, {trivial_label(), 2, 1}});
  CHECK(psi.dim() == 8);
  CHECK(psi.summands.front().a == 2);
  CHECK(psi.summands.back().a == 4);
  CHECK(psi == param("SO:9 = 2*tr(1,O).S2.S1 + tr(1,O).S4.S1"));
}

TEST_CASE("validation checks the dimension against the group") {
  ValidationReport good = validate_parameter(param("SO:9 = 2*tr(1,O).S2.S1 + tr(1,O).S4.S1"));
  CHECK(good.dimension_ok);
  CHECK(good.all_good_parity);
  CHECK(good.ok());

  LocalArthurParameter off = make_parameter(GroupSpec::parse("SO:9"),
                                            {{trivial_label(), 2, 1}});
  ValidationReport bad = validate_parameter(off);
  CHECK(!bad.dimension_ok);
  CHECK(!bad.ok());
  CHECK(!bad.notes.empty());
}

TEST_CASE("good parity depends on the family and the label type") {
  // Sp side (odd dual dimension) with an orthogonal label wants a+b even.
  CHECK(summand_good_parity(GroupFamily::Sp, {trivial_label(), 1, 3}));
  CHECK(!summand_good_parity(GroupFamily::Sp, {trivial_label(), 1, 2}));
  // The odd orthogonal side wants a+b odd.
  CHECK(summand_good_parity(GroupFamily::SOOdd, {trivial_label(), 2, 1}));
  CHECK(!summand_good_parity(GroupFamily::SOOdd, {trivial_label(), 1, 1}));
  // A symplectic-type label flips the rule.
  SupercuspidalLabel c{"c1", 1, SelfdualType::Symplectic, ""};
  CHECK(summand_good_parity(GroupFamily::Sp, {c, 1, 2}));
  CHECK(!summand_good_parity(GroupFamily::Sp, {c, 1, 3}));
}

TEST_CASE("bad-parity summands split into dual pairs") {
  LocalArthurParameter psi = make_parameter(GroupSpec::parse("SO:5"),
                                            {{trivial_label(), 1, 1},
                                             {trivial_label(), 1, 1},
                                             {trivial_label(), 2, 1}});
  GoodParitySplit split = good_parity_split(psi);
  REQUIRE(split.good.size() == 1);
  CHECK(split.good[0].a == 2);
  REQUIRE(split.paired.size() == 1);
  CHECK(split.paired[0] == ArthurSummand{trivial_label(), 1, 1});

  LocalArthurParameter odd = make_parameter(GroupSpec::parse("SO:3"),
                                            {{trivial_label(), 1, 1},
                                             {trivial_label(), 1, 2}});
  CHECK_THROWS_AS(good_parity_split(odd), ToolkitError);
}

TEST_CASE("duality swaps the two tensor factors") {
  LocalArthurParameter psi = param("SO:9 = tr(1,O).S1.S2 + tr(1,O).S2.S1 + tr(1,O).S4.S1");
  LocalArthurParameter hat = dual_psi(psi);
  CHECK(hat == param("SO:9 = tr(1,O).S1.S2 + tr(1,O).S1.S4 + tr(1,O).S2.S1"));
  CHECK(dual_psi(hat) == psi);
  CHECK(hat.group == psi.group);
  CHECK(hat.dim() == psi.dim());
}

TEST_CASE("duality also duals non-self-dual labels") {
  SupercuspidalLabel u{"u", 2, SelfdualType::Symplectic, "ubar"};
  LocalArthurParameter psi = make_parameter(
      GroupSpec::parse("Sp:8"),
      {{u, 2, 1}, {u.dual(), 2, 1}, {trivial_label(), 1, 1}});
  LocalArthurParameter hat = dual_psi(psi);
  bool saw_u = false, saw_ubar = false;
  for (const auto& s : hat.summands) {
    if (s.rho == u) { saw_u = true; CHECK(s.b == 2); }
    if (s.rho == u.dual()) { saw_ubar = true; CHECK(s.b == 2); }
  }
  CHECK(saw_u);
  CHECK(saw_ubar);
  CHECK(dual_psi(hat) == psi);
}

TEST_CASE("attached partition pair") {
  PartitionPair pp = partitions_of(param("SO:9 = tr(1,O).S2.S1 + tr(1,O).S3.S2"));
  CHECK(pp.pA.str() == "[2,2,2,1,1]");
  CHECK(pp.pD.str() == "[3,3,2]");

  LocalArthurParameter psi = param("SO:13 = tr(1,O).S1.S2 + tr(1,O).S1.S4 + tr(1,O).S6.S1");
  CHECK(partitions_of(psi).pD == partitions_of(dual_psi(psi)).pA);
  CHECK(partitions_of(psi).pA == partitions_of(dual_psi(psi)).pD);
}

TEST_CASE("spreading summands to S_1 factors gives the open extreme") {
  LambdaExtremes ext = extremal_parameters_of_lambda(param("SO:7 = tr(1,O).S3.S2"));
  CHECK(ext.open == param("SO:7 = tr(1,O).S2.S1 + tr(1,O).S4.S1"));
  CHECK(ext.zero == param("SO:7 = tr(1,O).S1.S2 + tr(1,O).S1.S4"));
  CHECK(ext.zero == dual_psi(ext.open));
  CHECK(infinitesimal_of(ext.open) == infinitesimal_of(ext.zero));
}

TEST_CASE("the L-parameter of a parameter spreads the second factor") {
  LocalLParameter phi = phi_of(param("SO:5 = tr(1,O).S1.S4"));
  REQUIRE(phi.summands.size() == 4);
  std::vector<HalfInt> xs;
  for (const auto& s : phi.summands) {
    CHECK(s.a == 1);
    xs.push_back(s.x);
  }
  std::sort(xs.begin(), xs.end());
  CHECK(xs == std::vector<HalfInt>{HalfInt::halves(-3), HalfInt::halves(-1),
                                   HalfInt::halves(1), HalfInt::halves(3)});
  CHECK(phi.dim() == 4);
}

TEST_CASE("infinitesimal class collects exponent multisets per label") {
  InfinitesimalClass cls = infinitesimal_of(param("SO:9 = 2*tr(1,O).S2.S1 + tr(1,O).S4.S1"));
  REQUIRE(cls.exponents.size() == 1);
  const auto& xs = cls.exponents.at(trivial_label());
  std::vector<HalfInt> want{HalfInt::halves(-3), HalfInt::halves(-1),
                            HalfInt::halves(-1), HalfInt::halves(-1),
                            HalfInt::halves(1),  HalfInt::halves(1),
                            HalfInt::halves(1),  HalfInt::halves(3)};
  CHECK(xs == want);
  CHECK(cls.str() == "tr: {-3/2,-1/2,-1/2,-1/2,1/2,1/2,1/2,3/2}");

  // Every parameter of the example family shares one class.
  CHECK(cls == infinitesimal_of(param("SO:9 = tr(1,O).S1.S2 + tr(1,O).S3.S2")));
  CHECK(cls != infinitesimal_of(param("SO:9 = tr(1,O).S1.S8")));
}
