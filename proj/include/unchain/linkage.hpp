#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "unchain/dendrogram.hpp"
#include "unchain/metric_space.hpp"

namespace unchain {

enum class LinkageKind { single, complete, average };

inline LinkageKind linkage_kind_from_string(const std::string& s) {
  if (s == "single" || s == "sl") return LinkageKind::single;
  if (s == "complete" || s == "cl") return LinkageKind::complete;
  if (s == "average" || s == "al") return LinkageKind::average;
  throw std::invalid_argument("unknown linkage kind: " + s);
}

// Min / max / arithmetic-mean cross distance between two disjoint blocks.
inline double linkage_value(LinkageKind kind, const std::vector<int>& left,
                            const std::vector<int>& right,
                            const FiniteMetricSpace& space) {
  if (left.empty() || right.empty())
    throw std::invalid_argument("empty block in linkage evaluation");
  require_disjoint(left, right);
  double mn = std::numeric_limits<double>::infinity();
  double mx = 0.0;
  double sum = 0.0;
  for (int u : left)
    for (int v : right) {
      const double d = space.dist(u, v);
      mn = std::min(mn, d);
      mx = std::max(mx, d);
      sum += d;
    }
  switch (kind) {
    case LinkageKind::single:
      return mn;
    case LinkageKind::complete:
      return mx;
    case LinkageKind::average:
      return sum / (static_cast<double>(left.size()) * right.size());
  }
  throw std::logic_error("unreachable");
}

// Recursive graph-component agglomeration: R_i is the minimum pairwise
// linkage; all block pairs at exactly R_i form edges simultaneously and the
// connected components merge at once (permutation invariant).
inline Dendrogram agglomerate(const FiniteMetricSpace& space, LinkageKind kind) {
  const int n = space.size();
  Dendrogram d;
  d.labels = space.labels();
  Partition cur = Partition::singletons(n);
  d.levels.push_back({0.0, cur});
  while (cur.blocks.size() > 1) {
    const int m = static_cast<int>(cur.blocks.size());
    std::vector<double> link(m * m, 0.0);
    double r = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        link[i * m + j] = linkage_value(kind, cur.blocks[i], cur.blocks[j], space);
        r = std::min(r, link[i * m + j]);
      }
    UnionFind uf(m);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (leq_level(link[i * m + j], r)) uf.unite(i, j);
    Partition grouped = Partition::from_union_find(uf, m);
    Partition next;
    for (const auto& group : grouped.blocks) {
      std::vector<int> merged;
      for (int b : group)
        merged.insert(merged.end(), cur.blocks[b].begin(), cur.blocks[b].end());
      next.blocks.push_back(std::move(merged));
    }
    next.canonicalize();
    cur = std::move(next);
    d.levels.push_back({r, cur});
  }
  return d;
}

// Single linkage via epsilon-components: the partition at t is the partition
// of X into its t-components.
inline Dendrogram single_linkage_components(const FiniteMetricSpace& space) {
  Dendrogram d;
  d.labels = space.labels();
  const DistanceLevels levels = distance_levels(space);
  for (double t : levels.levels) {
    Partition p = epsilon_components(space, t);
    if (d.levels.empty() || !(p == d.levels.back().partition))
      d.levels.push_back({t, std::move(p)});
  }
  return d;
}

}  // namespace unchain
