#include <catch_amalgamated.hpp>

#include <random>

#include "support/generators.hpp"
#include "unchain/dbscan.hpp"
#include "unchain/fixtures.hpp"

using namespace unchain;

TEST_CASE("eps=3 min_pts=4 on two-nuclei yields one cluster, no noise") {
  const FiniteMetricSpace space = fixture_by_name("two-nuclei").space();
  const DbscanLabeling out = dbscan(space, {3.0, 4});
  REQUIRE(out.clusters.size() == 1);
  CHECK(static_cast<int>(out.clusters[0].size()) == space.size());
  CHECK(out.noise.empty());
  CHECK(out.border_ambiguous.empty());
}

TEST_CASE("eps=2 min_pts=4 on two-nuclei-bridge: 2 clusters, 6 noise, z0 ambiguous") {
  const FiniteMetricSpace space = fixture_by_name("two-nuclei-bridge").space();
  const DbscanLabeling out = dbscan(space, {2.0, 4});
  REQUIRE(out.clusters.size() == 2);
  CHECK(out.noise.size() == 6);
  REQUIRE(out.border_ambiguous.size() == 1);
  CHECK(space.label(out.border_ambiguous[0]) == "z0");
  // z0 goes to the cluster of its lexicographically least reaching core (x0).
  const int z0 = space.index_of("z0");
  const int x0 = space.index_of("x0");
  bool together = false;
  for (const auto& c : out.clusters) {
    const bool has_z = std::find(c.begin(), c.end(), z0) != c.end();
    const bool has_x = std::find(c.begin(), c.end(), x0) != c.end();
    if (has_z) together = has_x;
  }
  CHECK(together);
}

TEST_CASE("min_pts=1 clusters are exactly the eps-components") {
  std::mt19937 rng(20240821);
  for (int i = 0; i < 30; ++i) {
    const FiniteMetricSpace space = gen::random_space(rng);
    for (double t : distance_levels(space).levels) {
      const DbscanLabeling out = dbscan(space, {t, 1});
      CHECK(out.noise.empty());
      Partition got;
      got.blocks = out.clusters;
      got.canonicalize();
      CHECK(got == epsilon_components(space, t));
    }
  }
}

TEST_CASE("parameter validation") {
  const FiniteMetricSpace space = fixture_by_name("uniform-ring").space();
  CHECK_THROWS_AS(dbscan(space, {-1.0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(dbscan(space, {1.0, 0}), std::invalid_argument);
}

TEST_CASE("labeling serialization is sorted and deterministic") {
  const FiniteMetricSpace space = fixture_by_name("two-nuclei-bridge").space();
  const nlohmann::json j = serialize(dbscan(space, {2.0, 4}), space);
  CHECK(j.at("noise") ==
        nlohmann::json({"x1", "x2", "x3", "y1", "y2", "y3"}));
  CHECK(j.at("border_ambiguous") == nlohmann::json({"z0"}));
  CHECK(j.at("clusters").size() == 2);
}
