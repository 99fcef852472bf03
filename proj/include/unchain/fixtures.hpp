#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "unchain/metric_space.hpp"

namespace unchain {

// Named weighted-graph fixtures; the metric is the shortest-path closure.
struct Fixture {
  std::string name;
  std::string doc;
  std::vector<std::string> points;
  std::vector<std::tuple<std::string, std::string, double>> edges;

  FiniteMetricSpace space() const {
    return FiniteMetricSpace::from_weighted_graph(points, edges);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["points"] = points;
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v, w] : edges) j["edges"].push_back({u, v, w});
    return j;
  }
};

namespace detail {

inline void clique(Fixture& f, const std::vector<std::string>& pts, double w) {
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      f.edges.emplace_back(pts[i], pts[j], w);
}

// The common two-nuclei skeleton: two weight-1 4-cliques N1 = {x0,a1..a3},
// N2 = {y0,b1..b3} with three satellites on each side.
inline Fixture two_nuclei_base() {
  Fixture f;
  f.points = {"x0", "a1", "a2", "a3", "x1", "x2", "x3",
              "y0", "b1", "b2", "b3", "y1", "y2", "y3"};
  clique(f, {"x0", "a1", "a2", "a3"}, 1.0);
  clique(f, {"y0", "b1", "b2", "b3"}, 1.0);
  return f;
}

}  // namespace detail

inline std::vector<Fixture> fixture_catalog() {
  std::vector<Fixture> out;

  {
    Fixture f = detail::two_nuclei_base();
    f.name = "two-nuclei";
    f.doc =
        "Two dense 4-point nuclei with satellites, joined by a single "
        "weight-3 bridge x0-y0.";
    for (const std::string xi : {"x1", "x2", "x3"})
      for (const std::string v : {"x0", "a1", "a2", "a3"})
        f.edges.emplace_back(xi, v, 3.0);
    for (const std::string yi : {"y1", "y2", "y3"})
      for (const std::string v : {"y0", "b1", "b2", "b3"})
        f.edges.emplace_back(yi, v, 3.0);
    detail::clique(f, {"x1", "x2", "x3"}, 3.0);
    detail::clique(f, {"y1", "y2", "y3"}, 3.0);
    f.edges.emplace_back("x0", "y0", 3.0);
    out.push_back(std::move(f));
  }

  {
    Fixture f = detail::two_nuclei_base();
    f.name = "two-nuclei-bridge";
    f.doc =
        "As two-nuclei, but the bridge is replaced by a middle point z0 with "
        "weight-2 edges x0-z0 and z0-y0.";
    f.points.push_back("z0");
    for (const std::string xi : {"x1", "x2", "x3"})
      for (const std::string v : {"x0", "a1", "a2", "a3"})
        f.edges.emplace_back(xi, v, 3.0);
    for (const std::string yi : {"y1", "y2", "y3"})
      for (const std::string v : {"y0", "b1", "b2", "b3"})
        f.edges.emplace_back(yi, v, 3.0);
    detail::clique(f, {"x1", "x2", "x3"}, 3.0);
    detail::clique(f, {"y1", "y2", "y3"}, 3.0);
    f.edges.emplace_back("x0", "z0", 2.0);
    f.edges.emplace_back("z0", "y0", 2.0);
    out.push_back(std::move(f));
  }

  {
    Fixture f;
    f.name = "uniform-ring";
    f.doc = "An 8-cycle with unit edge weights; no dense cores anywhere.";
    f.points = {"x0", "x1", "x2", "x3", "y3", "y2", "y1", "y0"};
    for (size_t i = 0; i < f.points.size(); ++i)
      f.edges.emplace_back(f.points[i], f.points[(i + 1) % f.points.size()], 1.0);
    out.push_back(std::move(f));
  }

  {
    Fixture f = detail::two_nuclei_base();
    f.name = "cl-cross";
    f.doc =
        "Two weight-1 4-cliques with stalk satellites and a weight-3 bridge; "
        "every other nucleus cross pair is pinned to 4 by direct edges.";
    for (const std::string xi : {"x1", "x2", "x3"}) f.edges.emplace_back(xi, "x0", 3.0);
    for (const std::string yi : {"y1", "y2", "y3"}) f.edges.emplace_back(yi, "y0", 3.0);
    f.edges.emplace_back("x0", "y0", 3.0);
    for (const std::string u : {"x0", "a1", "a2", "a3"})
      for (const std::string v : {"y0", "b1", "b2", "b3"})
        if (!(u == "x0" && v == "y0")) f.edges.emplace_back(u, v, 4.0);
    out.push_back(std::move(f));
  }

  {
    Fixture f = detail::two_nuclei_base();
    f.name = "al-bridge";
    f.doc =
        "Two weight-1 4-cliques with stalk satellites and a short weight-2.25 "
        "bridge x0-y0.";
    for (const std::string xi : {"x1", "x2", "x3"}) f.edges.emplace_back(xi, "x0", 3.0);
    for (const std::string yi : {"y1", "y2", "y3"}) f.edges.emplace_back(yi, "y0", 3.0);
    f.edges.emplace_back("x0", "y0", 2.25);
    out.push_back(std::move(f));
  }

  {
    Fixture f = detail::two_nuclei_base();
    f.name = "not-strong";
    f.doc =
        "Two weight-1 4-cliques, satellites attached to every nucleus vertex "
        "at weight 3, bridge x0-y0 of weight 2.5.";
    for (const std::string xi : {"x1", "x2", "x3"})
      for (const std::string v : {"x0", "a1", "a2", "a3"})
        f.edges.emplace_back(xi, v, 3.0);
    for (const std::string yi : {"y1", "y2", "y3"})
      for (const std::string v : {"y0", "b1", "b2", "b3"})
        f.edges.emplace_back(yi, v, 3.0);
    f.edges.emplace_back("x0", "y0", 2.5);
    out.push_back(std::move(f));
  }

  return out;
}

inline const Fixture& fixture_by_name(const std::string& name) {
  static const std::vector<Fixture> catalog = fixture_catalog();
  for (const auto& f : catalog)
    if (f.name == name) return f;
  std::string known;
  for (const auto& f : catalog) {
    if (!known.empty()) known += ", ";
    known += f.name;
  }
  throw std::invalid_argument("unknown fixture '" + name +
                              "'; available: " + known);
}

}  // namespace unchain
