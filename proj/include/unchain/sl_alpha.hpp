#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unchain/dendrogram.hpp"
#include "unchain/metric_space.hpp"
#include "unchain/rips.hpp"

namespace unchain {

// The graph G_alpha^t over the blocks of the previous partition. Edges are
// the block pairs passing conditions i (min cross distance <= t) and ii
// (admissible cross simplex). big flags are populated only in starred mode.
struct BlockGraph {
  double t = 0.0;
  int alpha = 1;
  std::vector<std::vector<int>> blocks;
  std::vector<std::pair<int, int>> edges;  // ordered pairs i < j
  std::vector<int> dims;                   // rips_dim of each block at t
  std::vector<bool> big;                   // meaningful per component, starred mode

  bool adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const auto& e : edges)
      if (e.first == i && e.second == j) return true;
    return false;
  }

  std::vector<std::vector<int>> components() const {
    UnionFind uf(static_cast<int>(blocks.size()));
    for (const auto& [i, j] : edges) uf.unite(i, j);
    return Partition::from_union_find(uf, static_cast<int>(blocks.size())).blocks;
  }
};

inline BlockGraph block_graph(const FiniteMetricSpace& space, const Partition& prev,
                              double t, int alpha) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  BlockGraph g;
  g.t = t;
  g.alpha = alpha;
  g.blocks = prev.blocks;
  const int m = static_cast<int>(g.blocks.size());
  g.dims.resize(m);
  for (int i = 0; i < m; ++i) g.dims[i] = rips_dim(space, g.blocks[i], t);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (cross_link_admissible(space, g.blocks[i], g.blocks[j], t, alpha,
                                g.dims[i], g.dims[j]))
        g.edges.emplace_back(i, j);
  return g;
}

// Big/small classification within one component (Eq.-style threshold:
// alpha * #(B) >= max cardinality in the component; equality counts as big).
inline std::pair<std::vector<int>, std::vector<int>> classify_blocks(
    const BlockGraph& g, const std::vector<int>& component, int alpha) {
  if (component.empty()) throw std::invalid_argument("empty component");
  size_t max_card = 0;
  for (int b : component) max_card = std::max(max_card, g.blocks[b].size());
  std::vector<int> big, small;
  for (int b : component) {
    if (static_cast<size_t>(alpha) * g.blocks[b].size() >= max_card)
      big.push_back(b);
    else
      small.push_back(b);
  }
  return {big, small};
}

// Merge plan for one component in starred mode: big-block components merge
// (condition iii); a small-block component is absorbed into a big component
// iff that big component is the only one adjacent to it (condition iv).
struct StarMergePlan {
  std::vector<std::vector<int>> big_components;  // indices into graph blocks
  struct SmallComponent {
    std::vector<int> blocks;
    std::vector<int> adjacent_big;  // indices into big_components
    bool absorbed = false;          // iff adjacent_big.size() == 1
  };
  std::vector<SmallComponent> small_components;

  // Resulting merge classes, each a list of block indices.
  std::vector<std::vector<int>> classes() const {
    std::vector<std::vector<int>> out = big_components;
    for (const auto& sc : small_components) {
      if (sc.absorbed) {
        auto& target = out[sc.adjacent_big.front()];
        target.insert(target.end(), sc.blocks.begin(), sc.blocks.end());
      } else {
        for (int b : sc.blocks) out.push_back({b});
      }
    }
    return out;
  }
};

inline StarMergePlan star_merge_plan(const BlockGraph& g,
                                     const std::vector<int>& component,
                                     int alpha) {
  const auto [big, small] = classify_blocks(g, component, alpha);
  if (big.empty())
    throw std::logic_error("component without big blocks; Eq. threshold broken");

  StarMergePlan plan;
  // Components of the subgraph induced on big blocks.
  {
    std::map<int, int> local;
    for (size_t i = 0; i < big.size(); ++i) local[big[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(big.size()));
    for (const auto& [a, b] : g.edges)
      if (local.count(a) && local.count(b)) uf.unite(local[a], local[b]);
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < big.size(); ++i)
      groups[uf.find(static_cast<int>(i))].push_back(big[i]);
    for (auto& [root, members] : groups)
      plan.big_components.push_back(std::move(members));
  }
  std::vector<int> big_comp_of(g.blocks.size(), -1);
  for (size_t c = 0; c < plan.big_components.size(); ++c)
    for (int b : plan.big_components[c]) big_comp_of[b] = static_cast<int>(c);

  // Components of the subgraph induced on small blocks.
  if (!small.empty()) {
    std::map<int, int> local;
    for (size_t i = 0; i < small.size(); ++i) local[small[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(small.size()));
    for (const auto& [a, b] : g.edges)
      if (local.count(a) && local.count(b)) uf.unite(local[a], local[b]);
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < small.size(); ++i)
      groups[uf.find(static_cast<int>(i))].push_back(small[i]);
    for (auto& [root, members] : groups) {
      StarMergePlan::SmallComponent sc;
      sc.blocks = std::move(members);
      std::vector<bool> seen(plan.big_components.size(), false);
      for (int b : sc.blocks)
        for (const auto& [x, y] : g.edges) {
          const int other = (x == b) ? y : (y == b) ? x : -1;
          if (other >= 0 && big_comp_of[other] >= 0 && !seen[big_comp_of[other]]) {
            seen[big_comp_of[other]] = true;
            sc.adjacent_big.push_back(big_comp_of[other]);
          }
        }
      if (sc.adjacent_big.empty())
        throw std::logic_error(
            "small-block component with no adjacent big component");
      sc.absorbed = sc.adjacent_big.size() == 1;
      plan.small_components.push_back(std::move(sc));
    }
  }
  return plan;
}

namespace detail {

inline Dendrogram run_sl_alpha(const FiniteMetricSpace& space, int alpha,
                               bool starred) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  const int n = space.size();
  Dendrogram d;
  d.labels = space.labels();
  Partition cur = Partition::singletons(n);
  d.levels.push_back({0.0, cur});
  const DistanceLevels levels = distance_levels(space);
  // Every level of D is visited: condition ii re-evaluates previously
  // blocked pairs as t grows.
  for (size_t li = 1; li < levels.levels.size(); ++li) {
    const double t = levels.levels[li];
    const BlockGraph g = block_graph(space, cur, t, alpha);
    std::vector<std::vector<int>> classes;
    if (starred) {
      for (const auto& component : g.components()) {
        for (auto& cls : star_merge_plan(g, component, alpha).classes())
          classes.push_back(std::move(cls));
      }
    } else {
      classes = g.components();
    }
    Partition next;
    for (const auto& cls : classes) {
      std::vector<int> merged;
      for (int b : cls)
        merged.insert(merged.end(), g.blocks[b].begin(), g.blocks[b].end());
      next.blocks.push_back(std::move(merged));
    }
    next.canonicalize();
    if (!(next == cur)) {
      d.levels.push_back({t, next});
      cur = std::move(next);
    }
    if (cur.blocks.size() == 1) break;
  }
  return d;
}

}  // namespace detail

// alpha-unchaining single linkage: iterate over every distance level,
// merging connected components of the block graph.
inline Dendrogram sl_alpha(const FiniteMetricSpace& space, int alpha) {
  return detail::run_sl_alpha(space, alpha, false);
}

// Starred variant: within each component, big-block components merge and
// small-block components are absorbed only when unambiguous.
inline Dendrogram sl_star_alpha(const FiniteMetricSpace& space, int alpha) {
  return detail::run_sl_alpha(space, alpha, true);
}

}  // namespace unchain
