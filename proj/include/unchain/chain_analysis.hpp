#pragma once

#include <array>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "unchain/dendrogram.hpp"
#include "unchain/metric_space.hpp"
#include "unchain/rips.hpp"
#include "unchain/sl_alpha.hpp"

namespace unchain {

// Detected chaining structure between subsets: the (a,b) parameters and the
// witness points realizing them.
struct ChainReport {
  enum class Kind { chained, single_edge, smaller_blocks };
  Kind kind = Kind::chained;
  double a = 0.0;
  double b = 0.0;
  std::vector<int> witness;  // (x0,y0), or the chain x_0..x_k
  // True when the literal reading of the definition's condition i (resp. the
  // literal cardinality bound for smaller blocks) held, not only the
  // consistent alternative reading.
  bool literal_reading = true;

  nlohmann::json to_json(const FiniteMetricSpace& space) const {
    nlohmann::json j;
    j["kind"] = kind == Kind::chained        ? "chained"
                : kind == Kind::single_edge ? "single_edge"
                                            : "smaller_blocks";
    j["a"] = a;
    j["b"] = b;
    std::vector<std::string> names;
    for (int i : witness) names.push_back(space.label(i));
    j["witnesses"] = names;
    j["literal_reading"] = literal_reading;
    return j;
  }
};

// Hypothesis-by-hypothesis verdict for a definition or theorem instance.
struct ScenarioCheck {
  struct Item {
    std::string id;
    bool holds = false;
    std::string witness;
  };
  std::vector<Item> hypotheses;
  // The conclusion scan is always performed so that failures are visible on
  // instances whose hypotheses do not hold (the CL/AL counterexamples).
  bool conclusion_holds = false;
  std::string conclusion_witness;
  std::vector<Item> extras;

  bool hypotheses_hold() const {
    for (const auto& h : hypotheses)
      if (!h.holds) return false;
    return true;
  }

  void add(const std::string& id, bool holds, const std::string& witness = "") {
    hypotheses.push_back({id, holds, witness});
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["hypotheses"] = nlohmann::json::array();
    for (const auto& h : hypotheses)
      j["hypotheses"].push_back(
          {{"id", h.id}, {"holds", h.holds}, {"witness", h.witness}});
    j["hypotheses_hold"] = hypotheses_hold();
    j["conclusion"] = {{"holds", conclusion_holds},
                       {"witness", conclusion_witness}};
    if (!extras.empty()) {
      j["extras"] = nlohmann::json::array();
      for (const auto& h : extras)
        j["extras"].push_back(
            {{"id", h.id}, {"holds", h.holds}, {"witness", h.witness}});
    }
    return j;
  }
};

namespace detail {

inline std::string point_pair(const FiniteMetricSpace& space, int a, int b) {
  return "(" + space.label(a) + "," + space.label(b) + ")";
}

// Minimal-threshold chain x_0..x_k with x_s in blocks[s]: minimizes the
// maximum consecutive distance (dynamic program over consecutive blocks).
struct ChainWitness {
  double a;
  std::vector<int> points;
};

inline ChainWitness best_chain(const FiniteMetricSpace& space,
                               const std::vector<std::vector<int>>& blocks) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> cost(blocks.front().size(), 0.0);
  std::vector<std::vector<int>> parent(blocks.size());
  for (size_t s = 1; s < blocks.size(); ++s) {
    std::vector<double> next(blocks[s].size(), inf);
    parent[s].assign(blocks[s].size(), -1);
    for (size_t y = 0; y < blocks[s].size(); ++y)
      for (size_t x = 0; x < blocks[s - 1].size(); ++x) {
        const double c =
            std::max(cost[x], space.dist(blocks[s - 1][x], blocks[s][y]));
        if (c < next[y]) {
          next[y] = c;
          parent[s][y] = static_cast<int>(x);
        }
      }
    cost = std::move(next);
  }
  size_t best = 0;
  for (size_t y = 1; y < cost.size(); ++y)
    if (cost[y] < cost[best]) best = y;
  ChainWitness w{cost[best], {}};
  std::vector<int> rev;
  int pos = static_cast<int>(best);
  for (int s = static_cast<int>(blocks.size()) - 1; s >= 0; --s) {
    rev.push_back(blocks[s][pos]);
    if (s > 0) pos = parent[s][pos];
  }
  w.points.assign(rev.rbegin(), rev.rend());
  return w;
}

inline bool contains(const std::vector<int>& block, int x) {
  return std::find(block.begin(), block.end(), x) != block.end();
}

inline bool subset_of(const std::vector<int>& small, const std::vector<int>& big) {
  for (int x : small)
    if (!contains(big, x)) return false;
  return true;
}

inline Partition make_partition(std::vector<std::vector<int>> blocks) {
  Partition p;
  p.blocks = std::move(blocks);
  p.canonicalize();
  return p;
}

inline std::string blocks_witness(const FiniteMetricSpace& space,
                                  const Partition& p) {
  std::ostringstream oss;
  for (const auto& b : p.blocks) oss << block_to_string(b, space.labels());
  return oss.str();
}

}  // namespace detail

// (a,b)-chained subsets: b is B1's connectivity threshold (the literal,
// asymmetric reading); set symmetric to use max of both thresholds instead.
inline std::optional<ChainReport> detect_chained(const FiniteMetricSpace& space,
                                                 const std::vector<int>& b1,
                                                 const std::vector<int>& b2,
                                                 bool symmetric = false) {
  if (b1.empty() || b2.empty()) throw std::invalid_argument("empty subset");
  require_disjoint(b1, b2);
  const double conn1 = connectivity_threshold(space, b1);
  const double conn2 = connectivity_threshold(space, b2);
  const double b = symmetric ? std::max(conn1, conn2) : conn1;
  if (!leq_level(conn2, b)) return std::nullopt;  // B2 not b-connected
  const CrossMin cross = min_cross_distance(space, b1, b2);
  if (!leq_level(cross.distance, b)) return std::nullopt;
  ChainReport r;
  r.kind = ChainReport::Kind::chained;
  r.a = cross.distance;
  r.b = b;
  r.witness = {cross.left, cross.right};
  r.literal_reading = !symmetric;
  return r;
}

// Chained by a single edge: the minimal cross pair (x0,y0) is unique and all
// other cross pairs exceed b. Both readings of condition i are evaluated:
// literal (B1's connectivity threshold equals a) and chained-style (equals b).
inline std::optional<ChainReport> detect_single_edge_chained(
    const FiniteMetricSpace& space, const std::vector<int>& b1,
    const std::vector<int>& b2) {
  if (b1.empty() || b2.empty()) throw std::invalid_argument("empty subset");
  require_disjoint(b1, b2);
  const CrossMin cross = min_cross_distance(space, b1, b2);
  // Uniqueness of the minimal cross pair.
  int hits = 0;
  for (int u : b1)
    for (int v : b2)
      if (same_level(space.dist(u, v), cross.distance)) ++hits;
  if (hits != 1) return std::nullopt;
  const double conn1 = connectivity_threshold(space, b1);
  const double conn2 = connectivity_threshold(space, b2);
  const double b = std::max(conn1, conn2);
  const double a = cross.distance;
  if (!leq_level(a, b)) return std::nullopt;
  // Condition iii: every other cross pair strictly exceeds b.
  for (int u : b1)
    for (int v : b2) {
      if (u == cross.left && v == cross.right) continue;
      if (leq_level(space.dist(u, v), b)) return std::nullopt;
    }
  const bool literal = same_level(conn1, a);
  const bool chained_style = same_level(conn1, b);
  if (!literal && !chained_style) return std::nullopt;
  ChainReport r;
  r.kind = ChainReport::Kind::single_edge;
  r.a = a;
  r.b = b;
  r.witness = {cross.left, cross.right};
  r.literal_reading = literal;
  return r;
}

// Chained through alpha-smaller blocks (conditions i-iv). The cardinality
// bound iv uses the endpoints #(B_0), #(B_k); literal_reading records whether
// the text's literal min{#(B_1), #(B_k)} bound also held.
inline std::optional<ChainReport> detect_smaller_block_chained(
    const FiniteMetricSpace& space, const std::vector<std::vector<int>>& blocks,
    int alpha) {
  if (blocks.size() < 2) throw std::invalid_argument("need at least two blocks");
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = i + 1; j < blocks.size(); ++j)
      require_disjoint(blocks[i], blocks[j]);
  const double b = connectivity_threshold(space, blocks.front());
  for (const auto& blk : blocks)
    if (!leq_level(connectivity_threshold(space, blk), b)) return std::nullopt;
  const auto chain = detail::best_chain(space, blocks);
  const double a = chain.a;
  if (!leq_level(a, b)) return std::nullopt;
  // Condition iii: every endpoint cross pair strictly exceeds b.
  for (int u : blocks.front())
    for (int v : blocks.back())
      if (leq_level(space.dist(u, v), b)) return std::nullopt;
  // Condition iv over the middle blocks.
  const size_t k = blocks.size() - 1;
  const size_t endpoint_min = std::min(blocks.front().size(), blocks.back().size());
  const size_t literal_min = std::min(blocks[1].size(), blocks.back().size());
  bool endpoint_ok = true, literal_ok = true;
  for (size_t s = 1; s < k; ++s) {
    if (static_cast<size_t>(alpha) * blocks[s].size() >= endpoint_min)
      endpoint_ok = false;
    if (static_cast<size_t>(alpha) * blocks[s].size() >= literal_min)
      literal_ok = false;
  }
  if (!endpoint_ok) return std::nullopt;
  ChainReport r;
  r.kind = ChainReport::Kind::smaller_blocks;
  r.a = a;
  r.b = b;
  r.witness = chain.points;
  r.literal_reading = literal_ok;
  return r;
}

// Strongly chaining check: whenever B1 sits inside a block of theta(t), the
// chained witness y0 must be there too.
inline ScenarioCheck verify_strongly_chaining(const Dendrogram& d,
                                              const FiniteMetricSpace& space,
                                              const std::vector<int>& b1,
                                              const std::vector<int>& b2) {
  ScenarioCheck check;
  const auto report = detect_chained(space, b1, b2);
  if (!report) {
    check.add("chained", false, "subsets are not chained");
    check.conclusion_witness = "precondition failed";
    return check;
  }
  check.add("chained", true,
            detail::point_pair(space, report->witness[0], report->witness[1]) +
                " a=" + std::to_string(report->a) + " b=" + std::to_string(report->b));
  const int y0 = report->witness[1];
  check.conclusion_holds = true;
  for (const auto& lv : d.levels)
    for (const auto& block : lv.partition.blocks)
      if (detail::subset_of(b1, block) && !detail::contains(block, y0)) {
        check.conclusion_holds = false;
        check.conclusion_witness =
            "t=" + std::to_string(lv.t) + " block " +
            detail::block_to_string(block, space.labels()) + " lacks " +
            space.label(y0);
        return check;
      }
  check.conclusion_witness = "implication holds at every level";
  return check;
}

// Completely chaining check: whenever B_0 sits inside a block, the whole
// witness chain must be there too.
inline ScenarioCheck verify_completely_chaining(
    const Dendrogram& d, const FiniteMetricSpace& space,
    const std::vector<std::vector<int>>& blocks, int alpha) {
  ScenarioCheck check;
  const auto report = detect_smaller_block_chained(space, blocks, alpha);
  if (!report) {
    check.add("smaller-block-chained", false, "detection failed");
    check.conclusion_witness = "precondition failed";
    return check;
  }
  std::string chain_names;
  for (int p : report->witness) chain_names += space.label(p) + " ";
  check.add("smaller-block-chained", true, "chain: " + chain_names);
  check.conclusion_holds = true;
  for (const auto& lv : d.levels)
    for (const auto& block : lv.partition.blocks)
      if (detail::subset_of(blocks.front(), block))
        for (int p : report->witness)
          if (!detail::contains(block, p)) {
            check.conclusion_holds = false;
            check.conclusion_witness =
                "t=" + std::to_string(lv.t) + " block " +
                detail::block_to_string(block, space.labels()) + " lacks " +
                space.label(p);
            return check;
          }
  check.conclusion_witness = "implication holds at every level";
  return check;
}

// Weakly unchaining check: hypotheses of the single-edge theorem, conclusion
// that {B1,B2} appears as a stored partition. The conclusion scan always
// runs, so counterexample methods report a conclusion failure even when a
// hypothesis is broken.
inline ScenarioCheck verify_weakly_unchaining(
    const Dendrogram& d, const FiniteMetricSpace& space,
    const std::vector<int>& b1, const std::vector<int>& b2,
    const std::vector<int>& n1, const std::vector<int>& n2, int alpha) {
  ScenarioCheck check;

  const bool covers = static_cast<int>(b1.size() + b2.size()) == space.size();
  require_disjoint(b1, b2);
  check.add("space-is-B1-union-B2", covers,
            covers ? "" : "B1 and B2 do not cover the space");

  const auto report = detect_single_edge_chained(space, b1, b2);
  double tj = 0.0, ti = 0.0;
  int x0 = -1, y0 = -1;
  if (report) {
    tj = report->a;
    ti = report->b;
    x0 = report->witness[0];
    y0 = report->witness[1];
    check.add("single-edge-chained", true,
              detail::point_pair(space, x0, y0) + " (t_j,t_i)=(" +
                  std::to_string(tj) + "," + std::to_string(ti) + ")" +
                  (report->literal_reading ? " [literal]" : " [chained-style]"));
  } else {
    check.add("single-edge-chained", false, "no single-edge chaining detected");
  }

  if (report) {
    const DistanceLevels levels = distance_levels(space);
    const int ji = levels.floor_index(tj);
    const double t_prev = ji > 0 ? levels.levels[ji - 1] : 0.0;
    const Partition& prev = partition_at(d, t_prev);
    const bool nested1 = [&] {
      for (const auto& blk : prev.blocks)
        if (detail::subset_of(n1, blk)) return true;
      return false;
    }();
    const bool nested2 = [&] {
      for (const auto& blk : prev.blocks)
        if (detail::subset_of(n2, blk)) return true;
      return false;
    }();
    check.add("nuclei-inside-blocks-at-prev-level", nested1 && nested2,
              "t_{j-1}=" + std::to_string(t_prev));
    const int d1 = rips_dim(space, n1, tj);
    const int d2 = rips_dim(space, n2, tj);
    check.add("nucleus-dims-exceed-alpha", d1 > alpha && d2 > alpha,
              "dims (" + std::to_string(d1) + "," + std::to_string(d2) +
                  ") vs alpha=" + std::to_string(alpha));
    check.add("witnesses-in-nuclei",
              detail::contains(n1, x0) && detail::contains(n2, y0),
              detail::point_pair(space, x0, y0));
    const double diam1 = subset_diameter(space, b1);
    const double diam2 = subset_diameter(space, b2);
    check.add("diameters-within-t_i", leq_level(diam1, ti) && leq_level(diam2, ti),
              "diams (" + std::to_string(diam1) + "," + std::to_string(diam2) +
                  ") vs t_i=" + std::to_string(ti));
    // Refinement at t_i, recorded alongside the conclusion.
    const Partition target = detail::make_partition({b1, b2});
    const bool refines = partition_at(d, ti).refines(target);
    check.extras.push_back(
        {"theta(t_i)-refines-{B1,B2}", refines, "t_i=" + std::to_string(ti)});
  }

  const Partition target = detail::make_partition({b1, b2});
  check.conclusion_holds = false;
  check.conclusion_witness = "{B1,B2} is never a stored partition";
  for (const auto& lv : d.levels)
    if (lv.partition == target) {
      check.conclusion_holds = true;
      check.conclusion_witness = "theta(t)={B1,B2} at t=" + std::to_string(lv.t);
      break;
    }
  return check;
}

// Scenario for the bridge-unchaining definition: two blocks joined by a
// chain of single points z_0..z_k, with satellite points on each side.
struct BridgeScenario {
  std::vector<int> b1;
  std::vector<int> b2;
  std::vector<int> z_chain;  // in chain order
  std::vector<int> x_list;
  std::vector<int> y_list;
};

inline ScenarioCheck verify_bridge_unchaining(const Dendrogram& d,
                                              const FiniteMetricSpace& space,
                                              const BridgeScenario& sc,
                                              int alpha) {
  if (sc.z_chain.empty()) throw std::invalid_argument("empty z-chain");
  ScenarioCheck check;
  std::vector<std::vector<int>> scenario_blocks{sc.b1, sc.b2};
  for (int z : sc.z_chain) scenario_blocks.push_back({z});
  for (int x : sc.x_list) scenario_blocks.push_back({x});
  for (int y : sc.y_list) scenario_blocks.push_back({y});
  const Partition scenario = detail::make_partition(scenario_blocks);

  const DistanceLevels levels = distance_levels(space);
  const int k = static_cast<int>(sc.z_chain.size()) - 1;

  auto dist_to = [&](int p, const std::vector<int>& blk) {
    double m = std::numeric_limits<double>::infinity();
    for (int q : blk) m = std::min(m, space.dist(p, q));
    return m;
  };

  // Evaluate conditions a)-h) at level t_i; the scenario partition must be
  // the dendrogram's partition at the preceding level.
  auto evaluate = [&](size_t li) {
    std::vector<ScenarioCheck::Item> items;
    const double ti = levels.levels[li];
    const double t_prev = levels.levels[li - 1];
    const bool at_prev = partition_at(d, t_prev) == scenario;
    items.push_back({"scenario-partition-at-t_{i-1}", at_prev,
                     "t_{i-1}=" + std::to_string(t_prev)});
    bool a = true;
    for (int j = 1; j <= k; ++j)
      a = a && same_level(space.dist(sc.z_chain[j - 1], sc.z_chain[j]), ti);
    items.push_back({"a-consecutive-z-distances-equal-t_i", a, ""});
    bool b = true;
    for (int j1 = 0; j1 <= k; ++j1)
      for (int j2 = j1 + 2; j2 <= k; ++j2)
        b = b && !leq_level(space.dist(sc.z_chain[j1], sc.z_chain[j2]), ti);
    items.push_back({"b-nonconsecutive-z-distances-exceed-t_i", b, ""});
    bool c = true;
    for (int x : sc.x_list) c = c && leq_level(dist_to(x, sc.b1), ti);
    items.push_back({"c-x-satellites-within-t_i-of-B1", c, ""});
    bool dd = true;
    for (int y : sc.y_list) dd = dd && leq_level(dist_to(y, sc.b2), ti);
    items.push_back({"d-y-satellites-within-t_i-of-B2", dd, ""});
    const bool e = leq_level(dist_to(sc.z_chain.front(), sc.b1), ti) &&
                   leq_level(dist_to(sc.z_chain.back(), sc.b2), ti);
    items.push_back({"e-chain-ends-within-t_i", e, ""});
    bool f = true;
    for (int j = 1; j <= k - 1; ++j)
      f = f && !leq_level(std::min(dist_to(sc.z_chain[j], sc.b1),
                                   dist_to(sc.z_chain[j], sc.b2)),
                          ti);
    items.push_back({"f-middle-chain-points-far-from-blocks", f, ""});
    bool g = !leq_level(min_cross_distance(space, sc.b1, sc.b2).distance, ti);
    for (int x : sc.x_list) {
      for (int z : sc.z_chain) g = g && !leq_level(space.dist(x, z), ti);
      g = g && !leq_level(dist_to(x, sc.b2), ti);
      for (int y : sc.y_list) g = g && !leq_level(space.dist(x, y), ti);
    }
    for (int y : sc.y_list) {
      for (int z : sc.z_chain) g = g && !leq_level(space.dist(y, z), ti);
      g = g && !leq_level(dist_to(y, sc.b1), ti);
    }
    items.push_back({"g-all-other-scenario-distances-exceed-t_i", g, ""});
    const size_t c1 = sc.b1.size(), c2 = sc.b2.size();
    const bool h = static_cast<size_t>(alpha) < std::max(c1, c2) &&
                   static_cast<size_t>(alpha) * c1 >= c2 &&
                   static_cast<size_t>(alpha) * c2 >= c1;
    items.push_back({"h-cardinality-balance", h,
                     "#B1=" + std::to_string(c1) + " #B2=" + std::to_string(c2)});
    return items;
  };

  std::optional<std::vector<ScenarioCheck::Item>> best;
  double best_ti = 0.0;
  int best_score = -1;
  for (size_t li = 1; li < levels.levels.size(); ++li) {
    auto items = evaluate(li);
    int score = 0;
    for (const auto& it : items) score += it.holds ? 1 : 0;
    if (score > best_score) {
      best_score = score;
      best = std::move(items);
      best_ti = levels.levels[li];
    }
    if (best_score == static_cast<int>(best->size())) break;
  }
  check.hypotheses = *best;
  check.extras.push_back({"t_i", true, std::to_string(best_ti)});

  // Conclusion: the target partition appears at some stored height.
  std::vector<std::vector<int>> target_blocks;
  std::vector<int> left = sc.b1;
  left.insert(left.end(), sc.x_list.begin(), sc.x_list.end());
  std::vector<int> right = sc.b2;
  right.insert(right.end(), sc.y_list.begin(), sc.y_list.end());
  target_blocks.push_back(left);
  target_blocks.push_back(right);
  for (int z : sc.z_chain) target_blocks.push_back({z});
  const Partition target = detail::make_partition(target_blocks);
  check.conclusion_holds = false;
  check.conclusion_witness = "target partition never stored";
  for (const auto& lv : d.levels)
    if (lv.partition == target) {
      check.conclusion_holds = true;
      check.conclusion_witness = "theta(t)=target at t=" + std::to_string(lv.t);
      break;
    }
  return check;
}

// Dominance scan: a quadruple (x,y,z,t) with u_sl(x,y) <= u_sl(z,t) but
// u(x,y) > u(z,t), absent when SL order dominance holds.
inline std::optional<std::array<int, 4>> check_sl_order_dominance(
    const Ultrametric& u, const Ultrametric& u_sl) {
  if (u.labels != u_sl.labels)
    throw std::invalid_argument("label sets differ");
  const int n = u.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int t = 0; t < n; ++t)
          if (leq_level(u_sl.at(x, y), u_sl.at(z, t)) &&
              lt_level(u.at(z, t), u.at(x, y)))
            return std::array<int, 4>{x, y, z, t};
  return std::nullopt;
}

// Scenario for the block-level bridge theorem: a chain of blocks B_0..B_k
// with satellite blocks attached to the endpoints.
struct ModerateScenario {
  std::vector<std::vector<int>> chain;             // B_0..B_k, k >= 2 blocks
  std::vector<std::vector<int>> left_satellites;   // B'_r
  std::vector<std::vector<int>> right_satellites;  // B''_s
};

// Checks hypotheses a)-h) of the block-level theorem (t_j <= t_i < 2 t_j)
// against the SL*(alpha) dendrogram and verifies the concluded partition.
inline ScenarioCheck verify_moderate_bridge_theorem(const FiniteMetricSpace& space,
                                                    int alpha,
                                                    const ModerateScenario& sc) {
  if (sc.chain.size() < 2) throw std::invalid_argument("chain needs >= 2 blocks");
  ScenarioCheck check;
  const int k = static_cast<int>(sc.chain.size()) - 1;

  auto block_dist = [&](const std::vector<int>& a, const std::vector<int>& b) {
    return min_cross_distance(space, a, b).distance;
  };

  // Condition a): consecutive block distances all equal; this pins t_j.
  double tj = block_dist(sc.chain[0], sc.chain[1]);
  bool a = true;
  for (int l = 2; l <= k; ++l)
    a = a && same_level(block_dist(sc.chain[l - 1], sc.chain[l]), tj);
  check.add("a-consecutive-block-distances-equal", a, "t_j=" + std::to_string(tj));

  const Dendrogram d = sl_star_alpha(space, alpha);
  const DistanceLevels levels = distance_levels(space);
  const int ji = levels.floor_index(tj);
  const bool tj_is_level = ji >= 0 && same_level(levels.levels[ji], tj);
  check.add("t_j-is-a-distance-level", tj_is_level, "");

  std::vector<std::vector<int>> scenario_blocks = sc.chain;
  for (const auto& blk : sc.left_satellites) scenario_blocks.push_back(blk);
  for (const auto& blk : sc.right_satellites) scenario_blocks.push_back(blk);
  const Partition scenario = detail::make_partition(scenario_blocks);
  const double t_prev = (tj_is_level && ji > 0) ? levels.levels[ji - 1] : 0.0;
  const bool at_prev = tj_is_level && partition_at(d, t_prev) == scenario;
  check.add("scenario-partition-at-t_{j-1}", at_prev,
            "t_{j-1}=" + std::to_string(t_prev));

  // Cardinality balance g) with the endpoint blocks.
  const size_t c0 = sc.chain.front().size(), ck = sc.chain.back().size();
  size_t max_mid = 0;
  for (int l = 1; l <= k - 1; ++l) max_mid = std::max(max_mid, sc.chain[l].size());
  const bool g_card = (k < 2 || static_cast<size_t>(alpha) * max_mid <
                                    std::max(c0, ck)) &&
                      static_cast<size_t>(alpha) * c0 >= ck &&
                      static_cast<size_t>(alpha) * ck >= c0;
  check.add("g-cardinality-balance", g_card,
            "#B_0=" + std::to_string(c0) + " #B_k=" + std::to_string(ck));

  // Per-level conditions b)-f), h) for t_i in [t_j, 2 t_j).
  auto level_ok = [&](double ti) {
    for (int l1 = 0; l1 <= k; ++l1)
      for (int l2 = l1 + 2; l2 <= k; ++l2)
        if (leq_level(block_dist(sc.chain[l1], sc.chain[l2]), ti)) return false;
    for (const auto& br : sc.left_satellites) {
      if (!leq_level(block_dist(br, sc.chain.front()), ti)) return false;
      for (int l = 1; l <= k; ++l)
        if (leq_level(block_dist(br, sc.chain[l]), ti)) return false;
    }
    for (const auto& bs : sc.right_satellites) {
      if (!leq_level(block_dist(bs, sc.chain.back()), ti)) return false;
      for (int l = 0; l <= k - 1; ++l)
        if (leq_level(block_dist(sc.chain[l], bs), ti)) return false;
    }
    for (const auto& br : sc.left_satellites)
      for (const auto& bs : sc.right_satellites)
        if (leq_level(block_dist(br, bs), ti)) return false;
    for (int l = 1; l <= k - 1; ++l)
      if (rips_dim(space, sc.chain[l], ti) >= alpha) return false;
    for (const auto& br : sc.left_satellites)
      if (rips_dim(space, br, ti) >= alpha) return false;
    for (const auto& bs : sc.right_satellites)
      if (rips_dim(space, bs, ti) >= alpha) return false;
    return true;
  };

  std::vector<double> valid_ti;
  for (double ti : levels.levels)
    if (leq_level(tj, ti) && lt_level(ti, 2.0 * tj) && level_ok(ti))
      valid_ti.push_back(ti);
  check.add("some-valid-t_i-in-[t_j,2t_j)", !valid_ti.empty(),
            valid_ti.empty() ? "" : "t_i=" + std::to_string(valid_ti.back()));

  // Conclusion: at every valid t_i the SL*(alpha) partition is the target.
  std::vector<int> left = sc.chain.front();
  for (const auto& blk : sc.left_satellites)
    left.insert(left.end(), blk.begin(), blk.end());
  std::vector<int> right = sc.chain.back();
  for (const auto& blk : sc.right_satellites)
    right.insert(right.end(), blk.begin(), blk.end());
  std::vector<std::vector<int>> target_blocks{left, right};
  for (int l = 1; l <= k - 1; ++l) target_blocks.push_back(sc.chain[l]);
  const Partition target = detail::make_partition(target_blocks);

  check.conclusion_holds = !valid_ti.empty();
  for (double ti : valid_ti)
    if (!(partition_at(d, ti) == target)) {
      check.conclusion_holds = false;
      check.conclusion_witness = "mismatch at t_i=" + std::to_string(ti) + ": " +
                                 detail::blocks_witness(space, partition_at(d, ti));
      return check;
    }
  check.conclusion_witness = valid_ti.empty()
                                 ? "no valid t_i"
                                 : "target partition holds at every valid t_i";
  return check;
}

}  // namespace unchain
