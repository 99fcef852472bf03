#include <catch_amalgamated.hpp>

#include <fstream>
#include <random>

#include "unchain/fixtures.hpp"
#include "unchain/linkage.hpp"
#include "unchain/sl_alpha.hpp"

using namespace unchain;

namespace {

struct Method {
  std::string tag;
  Dendrogram (*run)(const FiniteMetricSpace&);
};

const std::vector<Method> kMethods = {
    {"sl", [](const FiniteMetricSpace& s) { return agglomerate(s, LinkageKind::single); }},
    {"cl", [](const FiniteMetricSpace& s) { return agglomerate(s, LinkageKind::complete); }},
    {"al", [](const FiniteMetricSpace& s) { return agglomerate(s, LinkageKind::average); }},
    {"sl-alpha-1", [](const FiniteMetricSpace& s) { return sl_alpha(s, 1); }},
    {"sl-alpha-3", [](const FiniteMetricSpace& s) { return sl_alpha(s, 3); }},
    {"sl-star-1", [](const FiniteMetricSpace& s) { return sl_star_alpha(s, 1); }},
};

nlohmann::json load_golden(const std::string& name) {
  const std::string path = std::string(UNCHAIN_GOLDEN_DIR) + "/" + name + ".json";
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("catalog: every fixture loads into a connected space") {
  const auto catalog = fixture_catalog();
  REQUIRE(catalog.size() == 6);
  for (const auto& f : catalog) {
    const FiniteMetricSpace space = f.space();
    CHECK(space.size() == static_cast<int>(f.points.size()));
    CHECK_FALSE(f.doc.empty());
  }
  CHECK_THROWS_WITH(fixture_by_name("no-such"),
                    Catch::Matchers::ContainsSubstring("two-nuclei") &&
                        Catch::Matchers::ContainsSubstring("uniform-ring"));
}

TEST_CASE("two-nuclei has 14 vertices and 43 edges") {
  const Fixture& f = fixture_by_name("two-nuclei");
  CHECK(f.points.size() == 14);
  CHECK(f.edges.size() == 43);
}

TEST_CASE("fixture JSON round-trips through from_weighted_graph") {
  for (const auto& f : fixture_catalog()) {
    const nlohmann::json j = f.to_json();
    const auto points = j.at("points").get<std::vector<std::string>>();
    std::vector<std::tuple<std::string, std::string, double>> edges;
    for (const auto& e : j.at("edges"))
      edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>(),
                         e.at(2).get<double>());
    const FiniteMetricSpace a = FiniteMetricSpace::from_weighted_graph(points, edges);
    const FiniteMetricSpace b = f.space();
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i)
      for (int k = 0; k < a.size(); ++k) CHECK(a.dist(i, k) == b.dist(i, k));
  }
}

TEST_CASE("every produced dendrogram is structurally valid") {
  for (const auto& f : fixture_catalog()) {
    const FiniteMetricSpace space = f.space();
    for (const auto& m : kMethods) {
      const Dendrogram d = m.run(space);
      const auto violations = validate(d);
      INFO(f.name << " / " << m.tag
                  << (violations.empty() ? "" : ": " + violations.front()));
      CHECK(violations.empty());
      // eta round trip holds for every produced dendrogram.
      const Dendrogram back = from_ultrametric(to_ultrametric(d));
      REQUIRE(back.levels.size() == d.levels.size());
      for (size_t i = 0; i < d.levels.size(); ++i)
        CHECK(back.levels[i].partition == d.levels[i].partition);
    }
  }
}

TEST_CASE("dendrograms match the committed goldens") {
  for (const auto& f : fixture_catalog())
    for (const auto& m : kMethods) {
      const nlohmann::json expected = load_golden(f.name + "__" + m.tag);
      const nlohmann::json got = serialize(m.run(f.space()));
      INFO(f.name << " / " << m.tag);
      CHECK(got == expected);
    }
}

TEST_CASE("permutation invariance: input order never changes the result") {
  std::mt19937 rng(20240826);
  for (const auto& f : fixture_catalog()) {
    // Compare the level structure; the label table order follows the input.
    std::vector<nlohmann::json> reference;
    for (const auto& m : kMethods)
      reference.push_back(serialize(m.run(f.space())).at("levels"));
    for (int trial = 0; trial < 20; ++trial) {
      Fixture shuffled = f;
      std::shuffle(shuffled.points.begin(), shuffled.points.end(), rng);
      std::shuffle(shuffled.edges.begin(), shuffled.edges.end(), rng);
      const FiniteMetricSpace space = shuffled.space();
      for (size_t mi = 0; mi < kMethods.size(); ++mi) {
        INFO(f.name << " / " << kMethods[mi].tag << " / trial " << trial);
        CHECK(serialize(kMethods[mi].run(space)).at("levels") == reference[mi]);
      }
    }
  }
}
