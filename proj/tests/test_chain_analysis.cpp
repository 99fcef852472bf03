#include <catch_amalgamated.hpp>

#include <random>

#include "support/generators.hpp"
#include "unchain/chain_analysis.hpp"
#include "unchain/fixtures.hpp"
#include "unchain/linkage.hpp"
#include "unchain/sl_alpha.hpp"

using namespace unchain;

namespace {

const std::vector<std::string> kB1{"x0", "a1", "a2", "a3", "x1", "x2", "x3"};
const std::vector<std::string> kB2{"y0", "b1", "b2", "b3", "y1", "y2", "y3"};
const std::vector<std::string> kN1{"x0", "a1", "a2", "a3"};
const std::vector<std::string> kN2{"y0", "b1", "b2", "b3"};

}  // namespace

TEST_CASE("not-strong fixture: B1, B2 are (2.5, 3)-chained") {
  const FiniteMetricSpace space = fixture_by_name("not-strong").space();
  const auto r = detect_chained(space, space.indices_of(kB1), space.indices_of(kB2));
  REQUIRE(r.has_value());
  CHECK(r->a == 2.5);
  CHECK(r->b == 3.0);
  CHECK(space.label(r->witness[0]) == "x0");
  CHECK(space.label(r->witness[1]) == "y0");
  CHECK(r->literal_reading);
}

TEST_CASE("two-nuclei fixture: B1, B2 are (3,3)-chained by a single edge") {
  const FiniteMetricSpace space = fixture_by_name("two-nuclei").space();
  const auto r =
      detect_single_edge_chained(space, space.indices_of(kB1), space.indices_of(kB2));
  REQUIRE(r.has_value());
  CHECK(r->a == 3.0);
  CHECK(r->b == 3.0);
  CHECK(r->literal_reading);
}

TEST_CASE("single-edge detection rejects duplicated minimal cross pairs") {
  // Two cross pairs at the same minimal distance.
  const auto space = FiniteMetricSpace::from_distance_matrix(
      {"p", "q", "r", "s"}, {{0, 1, 2, 2}, {1, 0, 2, 2}, {2, 2, 0, 1},
                             {2, 2, 1, 0}});
  CHECK_FALSE(detect_single_edge_chained(space, {0, 1}, {2, 3}).has_value());
}

TEST_CASE("smaller-blocks detection on the bridge chain") {
  const FiniteMetricSpace space = fixture_by_name("two-nuclei-bridge").space();
  const std::vector<std::vector<int>> chain{space.indices_of(kB1),
                                            space.indices_of({"z0"}),
                                            space.indices_of(kB2)};
  const auto r = detect_smaller_block_chained(space, chain, 1);
  REQUIRE(r.has_value());
  CHECK(r->b == 3.0);                  // conn(B1): satellites sit at 3
  CHECK(r->a == 2.0);                  // x0 - z0 - y0 gaps
  CHECK_FALSE(r->literal_reading);     // literal middle bound is unsatisfiable
  REQUIRE(r->witness.size() == 3);
  CHECK(space.label(r->witness[1]) == "z0");
  // alpha = 7 makes {z0} no longer small relative to the endpoints.
  CHECK_FALSE(detect_smaller_block_chained(space, chain, 7).has_value());
}

TEST_CASE("SL is strongly chaining on the fixtures") {
  for (const char* name : {"two-nuclei", "not-strong", "al-bridge"}) {
    const FiniteMetricSpace space = fixture_by_name(name).space();
    const Dendrogram d = agglomerate(space, LinkageKind::single);
    const ScenarioCheck check = verify_strongly_chaining(
        d, space, space.indices_of(kB1), space.indices_of(kB2));
    CHECK(check.hypotheses_hold());
    CHECK(check.conclusion_holds);
  }
}

TEST_CASE("SL(1) is not strongly chaining on two-nuclei (by design)") {
  const FiniteMetricSpace space = fixture_by_name("two-nuclei").space();
  const Dendrogram d = sl_alpha(space, 1);
  const ScenarioCheck check = verify_strongly_chaining(
      d, space, space.indices_of(kB1), space.indices_of(kB2));
  CHECK(check.hypotheses_hold());
  CHECK_FALSE(check.conclusion_holds);  // theta(3) = {B1, B2} without y0
}

TEST_CASE("weakly unchaining: SL(1) passes on two-nuclei") {
  const FiniteMetricSpace space = fixture_by_name("two-nuclei").space();
  const ScenarioCheck check = verify_weakly_unchaining(
      sl_alpha(space, 1), space, space.indices_of(kB1), space.indices_of(kB2),
      space.indices_of(kN1), space.indices_of(kN2), 1);
  CHECK(check.hypotheses_hold());
  CHECK(check.conclusion_holds);
  CHECK_THAT(check.conclusion_witness,
             Catch::Matchers::ContainsSubstring("t=3"));
}

TEST_CASE("weakly unchaining: CL and AL conclusion failures") {
  {
    const FiniteMetricSpace space = fixture_by_name("cl-cross").space();
    const ScenarioCheck check = verify_weakly_unchaining(
        agglomerate(space, LinkageKind::complete), space, space.indices_of(kB1),
        space.indices_of(kB2), space.indices_of(kN1), space.indices_of(kN2), 1);
    CHECK_FALSE(check.conclusion_holds);
  }
  {
    const FiniteMetricSpace space = fixture_by_name("al-bridge").space();
    const ScenarioCheck check = verify_weakly_unchaining(
        agglomerate(space, LinkageKind::average), space, space.indices_of(kB1),
        space.indices_of(kB2), space.indices_of(kN1), space.indices_of(kN2), 1);
    CHECK_FALSE(check.conclusion_holds);
  }
}

TEST_CASE("bridge unchaining: SL*(1) passes on two-nuclei-bridge") {
  const FiniteMetricSpace space = fixture_by_name("two-nuclei-bridge").space();
  BridgeScenario sc;
  sc.b1 = space.indices_of(kN1);
  sc.b2 = space.indices_of(kN2);
  sc.z_chain = {space.index_of("z0")};
  sc.x_list = space.indices_of({"x1", "x2", "x3"});
  sc.y_list = space.indices_of({"y1", "y2", "y3"});
  const ScenarioCheck check =
      verify_bridge_unchaining(sl_star_alpha(space, 1), space, sc, 1);
  CHECK(check.hypotheses_hold());
  CHECK(check.conclusion_holds);
  CHECK_THAT(check.conclusion_witness,
             Catch::Matchers::ContainsSubstring("t=3"));
}

TEST_CASE("bridge unchaining: plain SL(1) fails the conclusion") {
  const FiniteMetricSpace space = fixture_by_name("two-nuclei-bridge").space();
  BridgeScenario sc;
  sc.b1 = space.indices_of(kN1);
  sc.b2 = space.indices_of(kN2);
  sc.z_chain = {space.index_of("z0")};
  sc.x_list = space.indices_of({"x1", "x2", "x3"});
  sc.y_list = space.indices_of({"y1", "y2", "y3"});
  const ScenarioCheck check =
      verify_bridge_unchaining(agglomerate(space, LinkageKind::single), space, sc, 1);
  CHECK_FALSE(check.conclusion_holds);
}

TEST_CASE("moderate bridge theorem on the two-nuclei-bridge instantiation") {
  const FiniteMetricSpace space = fixture_by_name("two-nuclei-bridge").space();
  ModerateScenario sc;
  sc.chain = {space.indices_of(kN1), space.indices_of({"z0"}),
              space.indices_of(kN2)};
  for (const char* s : {"x1", "x2", "x3"})
    sc.left_satellites.push_back(space.indices_of({s}));
  for (const char* s : {"y1", "y2", "y3"})
    sc.right_satellites.push_back(space.indices_of({s}));
  const ScenarioCheck check = verify_moderate_bridge_theorem(space, 1, sc);
  CHECK(check.hypotheses_hold());
  CHECK(check.conclusion_holds);
}

TEST_CASE("SL order dominance holds for SL and fails for CL") {
  const FiniteMetricSpace space = fixture_by_name("two-nuclei").space();
  const Ultrametric u_sl = to_ultrametric(agglomerate(space, LinkageKind::single));
  CHECK_FALSE(check_sl_order_dominance(u_sl, u_sl).has_value());
  const Ultrametric u_cl = to_ultrametric(agglomerate(space, LinkageKind::complete));
  CHECK(check_sl_order_dominance(u_cl, u_sl).has_value());
  Ultrametric other = u_sl;
  other.labels[0] = "renamed";
  CHECK_THROWS_AS(check_sl_order_dominance(other, u_sl), std::invalid_argument);
}

TEST_CASE("property: SL passes strongly chaining on every detected pair") {
  // Candidate pairs come from planted two-block instances; blocks of a
  // single SL level never detect (their cross distance exceeds the level).
  std::mt19937 rng(20240822);
  int detected = 0;
  for (int i = 0; i < 250; ++i) {
    const gen::WeaklyInstance inst = gen::make_weakly_instance(rng);
    const Dendrogram d = agglomerate(inst.space, LinkageKind::single);
    for (const auto& [b1, b2] :
         {std::pair{inst.b1, inst.b2}, std::pair{inst.b2, inst.b1}}) {
      const auto r = detect_chained(inst.space, b1, b2);
      if (!r) continue;
      ++detected;
      const ScenarioCheck check = verify_strongly_chaining(d, inst.space, b1, b2);
      CHECK(check.hypotheses_hold());
      CHECK(check.conclusion_holds);
    }
  }
  CHECK(detected >= 200);
}

TEST_CASE("property: SL passes completely chaining on generated chains") {
  std::mt19937 rng(20240823);
  int detected = 0;
  for (int i = 0; i < 250; ++i) {
    const gen::ChainInstance inst = gen::make_chain_instance(rng);
    const auto r =
        detect_smaller_block_chained(inst.space, inst.blocks, inst.alpha);
    if (!r) continue;
    ++detected;
    const Dendrogram d = agglomerate(inst.space, LinkageKind::single);
    const ScenarioCheck check =
        verify_completely_chaining(d, inst.space, inst.blocks, inst.alpha);
    CHECK(check.hypotheses_hold());
    CHECK(check.conclusion_holds);
  }
  CHECK(detected >= 200);
}

TEST_CASE("property: SL(alpha) is weakly unchaining on generated instances") {
  std::mt19937 rng(20240824);
  int verified = 0;
  for (int i = 0; i < 120; ++i) {
    const gen::WeaklyInstance inst = gen::make_weakly_instance(rng);
    const ScenarioCheck check = verify_weakly_unchaining(
        sl_alpha(inst.space, inst.alpha), inst.space, inst.b1, inst.b2,
        inst.n1, inst.n2, inst.alpha);
    CHECK(check.hypotheses_hold());
    CHECK(check.conclusion_holds);
    if (check.hypotheses_hold() && check.conclusion_holds) ++verified;
  }
  CHECK(verified >= 100);
}

TEST_CASE("property: SL*(alpha) is bridge unchaining on generated instances") {
  std::mt19937 rng(20240825);
  int verified = 0;
  for (int i = 0; i < 120; ++i) {
    const gen::BridgeInstance inst = gen::make_bridge_instance(rng);
    const ScenarioCheck check = verify_bridge_unchaining(
        sl_star_alpha(inst.space, inst.alpha), inst.space, inst.scenario,
        inst.alpha);
    CHECK(check.hypotheses_hold());
    CHECK(check.conclusion_holds);
    if (check.hypotheses_hold() && check.conclusion_holds) ++verified;
  }
  CHECK(verified >= 100);
}

TEST_CASE("report serialization carries witnesses") {
  const FiniteMetricSpace space = fixture_by_name("two-nuclei").space();
  const auto r =
      detect_single_edge_chained(space, space.indices_of(kB1), space.indices_of(kB2));
  REQUIRE(r.has_value());
  const nlohmann::json j = r->to_json(space);
  CHECK(j.at("kind") == "single_edge");
  CHECK(j.at("witnesses") == nlohmann::json({"x0", "y0"}));
}
