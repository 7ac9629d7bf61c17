// Acceptance gate: every criterion prints one [PASS]/[FAIL] line and the
// binary exits nonzero when any fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "arthurlab/dsl.hpp"
#include "arthurlab/l_param.hpp"
#include "arthurlab/orders.hpp"
#include "arthurlab/rng.hpp"
#include "arthurlab/suites.hpp"
#include "arthurlab/vogan.hpp"

using namespace arthurlab;

namespace {

int g_failures = 0;
int g_index = 0;

struct Check {
  std::string detail;  // first failed expectation, empty when the criterion holds
  void expect(bool cond, const std::string& what) {
    if (!cond && detail.empty()) detail = what;
  }
};

void criterion(const std::string& name, const std::function<void(Check&)>& body,
               int64_t budget_ms = -1) {
  ++g_index;
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("unhandled: ") + e.what());
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (budget_ms >= 0 && ms > budget_ms)
    c.expect(false, "took " + std::to_string(ms) + "ms, budget " +
                        std::to_string(budget_ms) + "ms");
  if (c.detail.empty()) {
    std::cout << "[PASS] criterion " << g_index << ": " << name << " (" << ms
              << "ms)\n";
  } else {
    ++g_failures;
    std::cout << "[FAIL] criterion " << g_index << ": " << name << " — "
              << c.detail << " (" << ms << "ms)\n";
  }
}

std::vector<LocalArthurParameter> family_so9() {
  return {parse_parameter("SO:9 = 2*tr(1,O).S2.S1 + tr(1,O).S4.S1"),
          parse_parameter("SO:9 = tr(1,O).S1.S2 + tr(1,O).S2.S1 + tr(1,O).S4.S1"),
          parse_parameter("SO:9 = tr(1,O).S2.S1 + tr(1,O).S3.S2"),
          parse_parameter("SO:9 = tr(1,O).S1.S2 + tr(1,O).S3.S2")};
}

std::vector<LocalArthurParameter> family_so9_duals() {
  return {parse_parameter("SO:9 = 2*tr(1,O).S1.S2 + tr(1,O).S1.S4"),
          parse_parameter("SO:9 = tr(1,O).S1.S2 + tr(1,O).S1.S4 + tr(1,O).S2.S1"),
          parse_parameter("SO:9 = tr(1,O).S1.S2 + tr(1,O).S2.S3"),
          parse_parameter("SO:9 = tr(1,O).S2.S1 + tr(1,O).S2.S3")};
}

std::string triangle_of(const LocalArthurParameter& psi) {
  auto blocks = unramified_reduction(phi_of(psi));
  if (blocks.size() != 1) return "<multi-block>";
  return rank_triangle(blocks.begin()->second).str();
}

void run_trials(Check& c, const std::string& what,
                std::string (*trial)(uint64_t), uint64_t seed, int n) {
  for (int k = 0; k < n; ++k) {
    std::string err = trial(mix_seed(seed, static_cast<uint64_t>(k)));
    if (!err.empty()) {
      c.expect(false, what + " trial " + std::to_string(k) + ": " + err);
      return;
    }
  }
}

}  // namespace

int main() {
  criterion("rank triangles of the worked rank-4 family", [](Check& c) {
    auto fam = family_so9();
    const char* want[4] = {"1 1 1 / 3 1 / 1", "1 1 1 / 2 1 / 1",
                           "1 1 0 / 3 1 / 1", "1 1 0 / 2 1 / 1"};
    for (int i = 0; i < 4; ++i) {
      std::string got = triangle_of(fam[i]);
      c.expect(got == want[i], "triangle " + std::to_string(i + 1) + " = " + got);
    }
  }, 1000);

  criterion("single-summand rank matrices over the worked grid", [](Check& c) {
    std::vector<HalfInt> grid{HalfInt::halves(-3), HalfInt::halves(-1),
                              HalfInt::halves(1), HalfInt::halves(3)};
    c.expect(m_matrix(HalfInt::whole(0), 2, grid).str() == "0 0 0 / 1 0 / 0",
             "matrix at (0, S2)");
    c.expect(m_matrix(HalfInt::halves(1), 3, grid).str() == "0 0 0 / 1 1 / 1",
             "matrix at (1/2, S3)");
    c.expect(m_matrix(HalfInt::halves(-1), 3, grid).str() == "1 1 0 / 1 0 / 0",
             "matrix at (-1/2, S3)");
  });

  criterion("partition table and the four orders on the family", [](Check& c) {
    auto fam = family_so9();
    const char* wantA[4] = {"[1,1,1,1,1,1,1,1]", "[2,1,1,1,1,1,1]",
                            "[2,2,2,1,1]", "[2,2,2,2]"};
    const char* wantD[4] = {"[4,2,2]", "[4,2,1,1]", "[3,3,2]", "[3,3,1,1]"};
    for (int i = 0; i < 4; ++i) {
      PartitionPair pp = partitions_of(fam[i]);
      c.expect(pp.pA.str() == wantA[i], "pA " + std::to_string(i + 1) + " = " + pp.pA.str());
      c.expect(pp.pD.str() == wantD[i], "pD " + std::to_string(i + 1) + " = " + pp.pD.str());
    }
    for (int i = 0; i + 1 < 4; ++i)
      c.expect(compare(fam[i], fam[i + 1], OrderKind::A) == OrderResult::Greater,
               "A chain link " + std::to_string(i + 1));
    std::vector<std::pair<int, int>> diamond{{1, 0}, {2, 0}, {3, 1}, {3, 2}};
    c.expect(poset_edges(fam, OrderKind::O) == diamond, "operator-order diamond");
    c.expect(poset_edges(fam, OrderKind::C) == diamond, "closure-order diamond");
    for (OrderKind k : {OrderKind::O, OrderKind::A, OrderKind::D, OrderKind::C}) {
      ExtremalReport ext = extremal(fam, k);
      c.expect(ext.maxima == std::vector<int>{0} && ext.minima == std::vector<int>{3},
               std::string("extremes under ") + std::string(order_kind_name(k)));
    }
  });

  criterion("the dual family collapses to one chain", [](Check& c) {
    auto fam = family_so9();
    auto hats = family_so9_duals();
    for (int i = 0; i < 4; ++i)
      c.expect(dual_psi(fam[i]) == hats[i], "dual " + std::to_string(i + 1));
    std::vector<std::pair<int, int>> chain{{0, 1}, {1, 2}, {2, 3}};
    c.expect(poset_edges(hats, OrderKind::C) == chain, "closure chain");
    c.expect(poset_edges(hats, OrderKind::D) == chain, "second-partition chain");
    c.expect(compare(hats[2], hats[1], OrderKind::C) == OrderResult::Greater,
             "comparable dual pair");
    c.expect(compare(fam[1], fam[2], OrderKind::C) == OrderResult::Incomparable,
             "incomparable original pair");
  });

  criterion("a pair ordered by one partition but not by closure", [](Check& c) {
    LocalArthurParameter q1 =
        parse_parameter("SO:13 = tr(1,O).S1.S2 + tr(1,O).S1.S4 + tr(1,O).S6.S1");
    LocalArthurParameter q2 = parse_parameter("SO:13 = tr(1,O).S1.S6 + tr(1,O).S3.S2");
    c.expect(compare(q1, q2, OrderKind::D) == OrderResult::Greater, "D comparison");
    c.expect(compare(q1, q2, OrderKind::C) == OrderResult::Incomparable, "C comparison");
  });

  criterion("randomized monotonicity of the three partition-borne orders", [](Check& c) {
    SuiteReport rep = run_suite("monotonicity", 2026, 1000);
    c.expect(rep.pass(), "failures=" + std::to_string(rep.failures) + " first=" +
                             rep.first_counterexample);
  }, 60000);

  criterion("randomized duality transport of raising moves", [](Check& c) {
    SuiteReport rep = run_suite("duality", 2026, 1000);
    c.expect(rep.pass(), "failures=" + std::to_string(rep.failures) + " first=" +
                             rep.first_counterexample);
  });

  criterion("randomized triangle identities and partition recovery", [](Check& c) {
    SuiteReport rep = run_suite("partition-triangle", 2026, 1000);
    c.expect(rep.pass(), "failures=" + std::to_string(rep.failures) + " first=" +
                             rep.first_counterexample);
  });

  criterion("randomized extremal sandwich", [](Check& c) {
    run_trials(c, "sandwich", sandwich_trial, 2027, 500);
  });

  criterion("worked multi-segment and Langlands-data chains", [](Check& c) {
    SuiteReport rep = run_suite("examples", 1, 1);
    c.expect(rep.pass(), "failures=" + std::to_string(rep.failures) + " first=" +
                             rep.first_counterexample);
    c.expect(rep.trials >= 100, "corpus held " + std::to_string(rep.trials) + " cases");
  }, 1000);

  criterion("serialization round trips byte for byte", [](Check& c) {
    run_trials(c, "roundtrip", roundtrip_trial, 2028, 1000);
  });

  if (g_failures == 0) {
    std::cout << "acceptance: all " << g_index << " criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " of " << g_index
            << " criteria failed\n";
  return 1;
}
