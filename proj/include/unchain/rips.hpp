#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "unchain/metric_space.hpp"

namespace unchain {

// Threshold graph on up to 64 local vertices, adjacency as bitmasks.
struct ThresholdGraph {
  int m = 0;
  std::vector<std::uint64_t> adj;

  ThresholdGraph(const FiniteMetricSpace& space, const std::vector<int>& points,
                 double t)
      : m(static_cast<int>(points.size())), adj(points.size(), 0) {
    if (m > 64)
      throw std::invalid_argument("clique search limited to 64 points, got " +
                                  std::to_string(m));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (leq_level(space.dist(points[i], points[j]), t)) {
          adj[i] |= std::uint64_t{1} << j;
          adj[j] |= std::uint64_t{1} << i;
        }
  }
};

namespace detail {

// Greedy-coloring upper bound: colors the candidate set and returns, per
// candidate in search order, the bound used for pruning (Tomita-style).
inline void color_sort(const ThresholdGraph& g, std::uint64_t cand,
                       std::vector<int>& order, std::vector<int>& bound) {
  order.clear();
  bound.clear();
  int color = 0;
  std::uint64_t uncolored = cand;
  while (uncolored) {
    ++color;
    std::uint64_t avail = uncolored;
    while (avail) {
      const int v = std::countr_zero(avail);
      avail &= ~(std::uint64_t{1} << v);
      avail &= ~g.adj[v];
      uncolored &= ~(std::uint64_t{1} << v);
      order.push_back(v);
      bound.push_back(color);
    }
  }
}

inline bool expand_exists(const ThresholdGraph& g, std::uint64_t cand, int cur,
                          int target) {
  if (cur >= target) return true;
  if (cur + std::popcount(cand) < target) return false;
  std::uint64_t rest = cand;
  while (rest) {
    const int v = std::countr_zero(rest);
    const std::uint64_t bit = std::uint64_t{1} << v;
    rest &= ~bit;
    if (expand_exists(g, rest & g.adj[v], cur + 1, target)) return true;
  }
  return false;
}

}  // namespace detail

// Exact maximum clique size of the threshold graph, branch and bound with a
// greedy-coloring bound; deterministic vertex order.
inline int max_clique_size(const ThresholdGraph& g, std::uint64_t cand, int seed) {
  int best = seed;
  auto rec = [&](auto&& self, std::uint64_t c, int cur) -> void {
    if (c == 0) {
      best = std::max(best, cur);
      return;
    }
    std::vector<int> ord, bnd;
    detail::color_sort(g, c, ord, bnd);
    for (int i = static_cast<int>(ord.size()) - 1; i >= 0; --i) {
      if (cur + bnd[i] <= best) return;
      const int v = ord[i];
      self(self, c & g.adj[v], cur + 1);
      c &= ~(std::uint64_t{1} << v);
    }
  };
  rec(rec, cand, 0);
  return best;
}

inline std::uint64_t full_mask(int m) {
  return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

// Dimension of the Rips complex F_t(subset): maximum clique size of the
// <=t threshold graph minus one.
inline int rips_dim(const FiniteMetricSpace& space, const std::vector<int>& subset,
                    double t) {
  if (subset.empty()) throw std::invalid_argument("empty subset");
  const ThresholdGraph g(space, subset, t);
  return max_clique_size(g, full_mask(g.m), 1) - 1;
}

inline int rips_dim(const FiniteMetricSpace& space,
                    const std::vector<std::string>& subset, double t) {
  return rips_dim(space, space.indices_of(subset), t);
}

// Dimension of the largest simplex of F_t(left u right) meeting both sides,
// absent when no cross pair is within t. Every cross simplex contains a
// cross edge, so the search branches on cross edges.
inline std::optional<int> max_cross_simplex_dim(const FiniteMetricSpace& space,
                                                const std::vector<int>& left,
                                                const std::vector<int>& right,
                                                double t) {
  if (left.empty() || right.empty()) throw std::invalid_argument("empty subset");
  require_disjoint(left, right);
  std::vector<int> points = left;
  points.insert(points.end(), right.begin(), right.end());
  const ThresholdGraph g(space, points, t);
  const int nl = static_cast<int>(left.size());
  int best = 0;  // clique size; 0 means no cross simplex
  for (int i = 0; i < nl; ++i)
    for (int j = nl; j < g.m; ++j) {
      if (!(g.adj[i] >> j & 1)) continue;
      const std::uint64_t cand = g.adj[i] & g.adj[j];
      if (2 + std::popcount(cand) <= best) continue;
      best = std::max(best, 2 + max_clique_size(g, cand, std::max(0, best - 2)));
    }
  if (best == 0) return std::nullopt;
  return best - 1;
}

// Conditions i and ii of the block-graph construction: the blocks are within
// t, and some cross simplex Delta satisfies alpha*dim(Delta) >= min of the
// blocks' Rips dimensions. Dimensions may be supplied when already known.
inline bool cross_link_admissible(const FiniteMetricSpace& space,
                                  const std::vector<int>& left,
                                  const std::vector<int>& right, double t,
                                  int alpha, int dim_left = -1,
                                  int dim_right = -1) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  if (left.empty() || right.empty()) throw std::invalid_argument("empty subset");
  require_disjoint(left, right);
  if (!leq_level(min_cross_distance(space, left, right).distance, t))
    return false;
  if (dim_left < 0) dim_left = rips_dim(space, left, t);
  if (dim_right < 0) dim_right = rips_dim(space, right, t);
  const int min_dim = std::min(dim_left, dim_right);
  // Required simplex dimension: ceil(min_dim / alpha); clique size one more.
  const int target = (min_dim + alpha - 1) / alpha + 1;
  if (target <= 2) return true;  // any cross edge suffices, and one exists
  std::vector<int> points = left;
  points.insert(points.end(), right.begin(), right.end());
  const ThresholdGraph g(space, points, t);
  const int nl = static_cast<int>(left.size());
  for (int i = 0; i < nl; ++i)
    for (int j = nl; j < g.m; ++j) {
      if (!(g.adj[i] >> j & 1)) continue;
      if (detail::expand_exists(g, g.adj[i] & g.adj[j], 2, target)) return true;
    }
  return false;
}

}  // namespace unchain
