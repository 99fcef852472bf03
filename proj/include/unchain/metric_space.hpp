#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace unchain {

// Two distances are treated as the same level when their relative
// difference is below this bound.
inline constexpr double kLevelTolerance = 1e-9;

inline bool same_level(double a, double b) {
  const double diff = std::abs(a - b);
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  return diff <= kLevelTolerance * scale;
}

inline bool leq_level(double a, double b) { return a <= b || same_level(a, b); }
inline bool lt_level(double a, double b) { return a < b && !same_level(a, b); }

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

// A partition of {0,...,n-1} into disjoint non-empty blocks. Canonical form:
// each block sorted ascending, blocks ordered by their smallest element.
struct Partition {
  std::vector<std::vector<int>> blocks;

  void canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  static Partition singletons(int n) {
    Partition p;
    p.blocks.reserve(n);
    for (int i = 0; i < n; ++i) p.blocks.push_back({i});
    return p;
  }

  static Partition from_union_find(UnionFind& uf, int n) {
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
    Partition p;
    for (auto& [root, members] : groups) p.blocks.push_back(std::move(members));
    p.canonicalize();
    return p;
  }

  int size() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
  }

  // Index of the block containing point i, -1 if absent.
  int block_of(int i) const {
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
      for (int x : blocks[b])
        if (x == i) return b;
    return -1;
  }

  // True when every block of *this is contained in a block of coarser.
  bool refines(const Partition& coarser) const {
    std::vector<int> owner(coarser.size() + size(), -1);
    int n = 0;
    for (const auto& b : coarser.blocks)
      for (int x : b) n = std::max(n, x + 1);
    owner.assign(n, -1);
    for (int b = 0; b < static_cast<int>(coarser.blocks.size()); ++b)
      for (int x : coarser.blocks[b]) owner[x] = b;
    for (const auto& b : blocks) {
      if (b.empty()) return false;
      const int o = owner[b.front()];
      for (int x : b)
        if (owner[x] != o) return false;
    }
    return true;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks == b.blocks;
  }
};

// A finite metric space: a stable label table plus a dense symmetric
// distance matrix. All computation uses indices 0..n-1.
class FiniteMetricSpace {
 public:
  static FiniteMetricSpace from_distance_matrix(
      const std::vector<std::string>& labels,
      const std::vector<std::vector<double>>& matrix,
      bool require_triangle = false) {
    const int n = static_cast<int>(labels.size());
    check_labels(labels);
    if (static_cast<int>(matrix.size()) != n)
      throw std::invalid_argument("distance matrix has " +
                                  std::to_string(matrix.size()) + " rows, expected " +
                                  std::to_string(n));
    for (int i = 0; i < n; ++i)
      if (static_cast<int>(matrix[i].size()) != n)
        throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                    std::to_string(matrix[i].size()) +
                                    " entries, expected " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
      if (matrix[i][i] != 0.0)
        throw std::invalid_argument("nonzero diagonal at index " + std::to_string(i));
      for (int j = 0; j < n; ++j) {
        if (matrix[i][j] < 0.0)
          throw std::invalid_argument("negative entry at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
        if (matrix[i][j] != matrix[j][i])
          throw std::invalid_argument("asymmetric entries at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
        if (i != j && matrix[i][j] == 0.0)
          throw std::invalid_argument("zero distance between distinct points " +
                                      std::to_string(i) + " and " + std::to_string(j));
      }
    }
    if (require_triangle) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (lt_level(matrix[i][k] + matrix[k][j], matrix[i][j]))
              throw std::invalid_argument(
                  "triangle inequality violated at indices (" + std::to_string(i) +
                  "," + std::to_string(j) + "," + std::to_string(k) + ")");
    }
    FiniteMetricSpace space(labels);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) space.d_[i * n + j] = matrix[i][j];
    return space;
  }

  // Shortest-path metric closure of a connected weighted graph.
  static FiniteMetricSpace from_weighted_graph(
      const std::vector<std::string>& labels,
      const std::vector<std::tuple<std::string, std::string, double>>& edges) {
    const int n = static_cast<int>(labels.size());
    check_labels(labels);
    FiniteMetricSpace space(labels);
    const double inf = std::numeric_limits<double>::infinity();
    std::fill(space.d_.begin(), space.d_.end(), inf);
    for (int i = 0; i < n; ++i) space.d_[i * n + i] = 0.0;
    for (const auto& [u, v, w] : edges) {
      if (w <= 0.0)
        throw std::invalid_argument("non-positive weight " + std::to_string(w) +
                                    " on edge (" + u + "," + v + ")");
      const int a = space.index_of(u);
      const int b = space.index_of(v);
      if (a == b)
        throw std::invalid_argument("self-loop on vertex " + u);
      double& cur = space.d_[a * n + b];
      cur = std::min(cur, w);
      space.d_[b * n + a] = cur;
    }
    // Floyd-Warshall closure.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double via = space.d_[i * n + k] + space.d_[k * n + j];
          if (via < space.d_[i * n + j]) space.d_[i * n + j] = via;
        }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (std::isinf(space.d_[i * n + j])) {
          throw std::invalid_argument("graph is disconnected: " +
                                      space.describe_components());
        }
    return space;
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  double dist(int i, int j) const { return d_[i * size() + j]; }

  double dist(const std::string& a, const std::string& b) const {
    return dist(index_of(a), index_of(b));
  }

  int index_of(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end())
      throw std::invalid_argument("unknown label: " + label);
    return it->second;
  }

  bool has_label(const std::string& label) const {
    return index_.count(label) != 0;
  }

  double diameter() const {
    double m = 0.0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j) m = std::max(m, dist(i, j));
    return m;
  }

  std::vector<int> indices_of(const std::vector<std::string>& labels) const {
    std::vector<int> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(index_of(l));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
      throw std::invalid_argument("duplicate label in subset");
    return out;
  }

 private:
  explicit FiniteMetricSpace(const std::vector<std::string>& labels)
      : labels_(labels), d_(labels.size() * labels.size(), 0.0) {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
      index_[labels_[i]] = i;
  }

  static void check_labels(const std::vector<std::string>& labels) {
    if (labels.empty()) throw std::invalid_argument("empty label list");
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw std::invalid_argument("duplicate label: " + *dup);
  }

  // Names the connected components of the finite-distance relation.
  std::string describe_components() const {
    const int n = size();
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!std::isinf(d_[i * n + j])) uf.unite(i, j);
    const Partition p = Partition::from_union_find(uf, n);
    std::ostringstream oss;
    for (size_t b = 0; b < p.blocks.size(); ++b) {
      if (b) oss << " | ";
      oss << "{";
      for (size_t k = 0; k < p.blocks[b].size(); ++k) {
        if (k) oss << ",";
        oss << labels_[p.blocks[b][k]];
      }
      oss << "}";
    }
    return oss.str();
  }

  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<double> d_;
};

// The ordered set of realized distances, t_0 = 0 first. Distances whose
// relative difference is below the level tolerance collapse to one level.
struct DistanceLevels {
  std::vector<double> levels;

  // Index of the greatest level <= t, or -1 when t < 0.
  int floor_index(double t) const {
    int idx = -1;
    for (int i = 0; i < static_cast<int>(levels.size()); ++i)
      if (leq_level(levels[i], t)) idx = i;
    return idx;
  }
};

inline DistanceLevels distance_levels(const FiniteMetricSpace& space) {
  std::vector<double> all;
  all.push_back(0.0);
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j) all.push_back(space.dist(i, j));
  std::sort(all.begin(), all.end());
  DistanceLevels out;
  for (double v : all)
    if (out.levels.empty() || !same_level(out.levels.back(), v))
      out.levels.push_back(v);
  return out;
}

// Maximal subsets whose points are pairwise joined by chains with
// consecutive distances <= eps.
inline Partition epsilon_components(const FiniteMetricSpace& space, double eps) {
  if (eps < 0.0)
    throw std::invalid_argument("negative eps: " + std::to_string(eps));
  const int n = space.size();
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq_level(space.dist(i, j), eps)) uf.unite(i, j);
  return Partition::from_union_find(uf, n);
}

// min{t | subset is t-connected}, chains restricted to the subset.
// Computed as the largest edge of a minimax spanning tree.
inline double connectivity_threshold(const FiniteMetricSpace& space,
                                     const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("empty subset");
  const int m = static_cast<int>(subset.size());
  std::vector<bool> in_tree(m, false);
  std::vector<double> best(m, std::numeric_limits<double>::infinity());
  best[0] = 0.0;
  double threshold = 0.0;
  for (int step = 0; step < m; ++step) {
    int pick = -1;
    for (int i = 0; i < m; ++i)
      if (!in_tree[i] && (pick < 0 || best[i] < best[pick])) pick = i;
    in_tree[pick] = true;
    threshold = std::max(threshold, best[pick]);
    for (int i = 0; i < m; ++i)
      if (!in_tree[i])
        best[i] = std::min(best[i], space.dist(subset[pick], subset[i]));
  }
  return threshold;
}

inline double subset_diameter(const FiniteMetricSpace& space,
                              const std::vector<int>& subset) {
  double m = 0.0;
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = i + 1; j < subset.size(); ++j)
      m = std::max(m, space.dist(subset[i], subset[j]));
  return m;
}

// Minimum cross distance between two disjoint subsets plus a realizing pair.
struct CrossMin {
  double distance;
  int left;
  int right;
};

inline CrossMin min_cross_distance(const FiniteMetricSpace& space,
                                   const std::vector<int>& left,
                                   const std::vector<int>& right) {
  CrossMin best{std::numeric_limits<double>::infinity(), -1, -1};
  for (int u : left)
    for (int v : right)
      if (space.dist(u, v) < best.distance) best = {space.dist(u, v), u, v};
  return best;
}

inline void require_disjoint(const std::vector<int>& left,
                             const std::vector<int>& right) {
  for (int u : left)
    for (int v : right)
      if (u == v)
        throw std::invalid_argument("subsets overlap at index " + std::to_string(u));
}

}  // namespace unchain
