#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "unchain/metric_space.hpp"

namespace unchain {

// A dendrogram: partitions indexed by height, stored only at heights where
// the partition changes; queries resolve by right-continuity.
struct Dendrogram {
  std::vector<std::string> labels;
  struct Level {
    double t;
    Partition partition;
  };
  std::vector<Level> levels;

  int index_of(const std::string& label) const {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      if (labels[i] == label) return i;
    throw std::invalid_argument("unknown label: " + label);
  }

  std::vector<double> merge_heights() const {
    std::vector<double> out;
    for (const auto& lv : levels)
      if (lv.t > 0.0) out.push_back(lv.t);
    return out;
  }
};

// A symmetric non-negative function on label pairs, zero exactly on the
// diagonal, satisfying the strong triangle inequality.
struct Ultrametric {
  std::vector<std::string> labels;
  std::vector<double> values;  // dense n*n

  int n() const { return static_cast<int>(labels.size()); }
  double at(int i, int j) const { return values[i * n() + j]; }
  double& at(int i, int j) { return values[i * n() + j]; }

  static Ultrametric zeros(const std::vector<std::string>& labels) {
    Ultrametric u;
    u.labels = labels;
    u.values.assign(labels.size() * labels.size(), 0.0);
    return u;
  }

  // First triple violating u(x,y) <= max(u(x,z), u(z,y)), if any.
  std::optional<std::array<int, 3>> violation() const {
    for (int i = 0; i < n(); ++i)
      for (int j = 0; j < n(); ++j)
        for (int k = 0; k < n(); ++k)
          if (lt_level(std::max(at(i, k), at(k, j)), at(i, j)))
            return std::array<int, 3>{i, j, k};
    return std::nullopt;
  }
};

namespace detail {
inline std::string block_to_string(const std::vector<int>& block,
                                   const std::vector<std::string>& labels) {
  std::vector<std::string> names;
  for (int i : block) names.push_back(labels[i]);
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (size_t k = 0; k < names.size(); ++k) {
    if (k) out += ",";
    out += names[k];
  }
  return out + "}";
}
}  // namespace detail

// Checks the four dendrogram axioms; violations are data, not faults.
inline std::vector<std::string> validate(const Dendrogram& d) {
  std::vector<std::string> out;
  const int n = static_cast<int>(d.labels.size());
  if (d.levels.empty()) {
    out.push_back("no levels stored");
    return out;
  }
  if (d.levels.front().t != 0.0)
    out.push_back("first level height is " + std::to_string(d.levels.front().t) +
                  ", expected 0");
  if (static_cast<int>(d.levels.front().partition.blocks.size()) != n ||
      d.levels.front().partition.size() != n)
    out.push_back("level at height 0 is not the all-singletons partition");
  if (d.levels.back().partition.blocks.size() != 1)
    out.push_back("last level is not the single-block partition");
  for (size_t i = 0; i < d.levels.size(); ++i) {
    const auto& p = d.levels[i].partition;
    if (p.size() != n)
      out.push_back("level " + std::to_string(d.levels[i].t) +
                    " does not cover the whole space");
    for (const auto& b : p.blocks)
      if (b.empty())
        out.push_back("empty block at height " + std::to_string(d.levels[i].t));
    std::set<int> seen;
    for (const auto& b : p.blocks)
      for (int x : b)
        if (!seen.insert(x).second)
          out.push_back("overlapping blocks at height " +
                        std::to_string(d.levels[i].t));
    if (i > 0) {
      if (!(d.levels[i - 1].t < d.levels[i].t))
        out.push_back("heights not strictly increasing at index " +
                      std::to_string(i));
      if (!d.levels[i - 1].partition.refines(p)) {
        // Name an offending block.
        std::string offender;
        for (const auto& b : d.levels[i - 1].partition.blocks) {
          const int owner = p.block_of(b.front());
          for (int x : b)
            if (p.block_of(x) != owner)
              offender = detail::block_to_string(b, d.labels);
        }
        out.push_back("refinement violated between heights " +
                      std::to_string(d.levels[i - 1].t) + " and " +
                      std::to_string(d.levels[i].t) + " at block " + offender);
      }
    }
  }
  return out;
}

inline const Partition& partition_at(const Dendrogram& d, double t) {
  if (t < 0.0) throw std::invalid_argument("negative height");
  const Partition* cur = nullptr;
  for (const auto& lv : d.levels) {
    if (leq_level(lv.t, t)) cur = &lv.partition;
  }
  if (cur == nullptr) throw std::invalid_argument("dendrogram has no level at 0");
  return *cur;
}

// The map eta: u(x,x') = least stored height at which x,x' share a block.
inline Ultrametric to_ultrametric(const Dendrogram& d) {
  const auto violations = validate(d);
  if (!violations.empty())
    throw std::invalid_argument("invalid dendrogram: " + violations.front());
  Ultrametric u = Ultrametric::zeros(d.labels);
  const int n = u.n();
  std::vector<bool> joined(n * n, false);
  for (const auto& lv : d.levels)
    for (const auto& b : lv.partition.blocks)
      for (int x : b)
        for (int y : b)
          if (x != y && !joined[x * n + y]) {
            joined[x * n + y] = true;
            u.at(x, y) = lv.t;
          }
  return u;
}

// Inverse of eta: blocks at height t are the classes of u(.,.) <= t.
inline Dendrogram from_ultrametric(const Ultrametric& u) {
  if (const auto bad = u.violation()) {
    const auto [i, j, k] = *bad;
    throw std::invalid_argument("ultrametric inequality violated on triple (" +
                                u.labels[i] + "," + u.labels[j] + "," +
                                u.labels[k] + ")");
  }
  const int n = u.n();
  std::vector<double> heights{0.0};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) heights.push_back(u.at(i, j));
  std::sort(heights.begin(), heights.end());
  Dendrogram d;
  d.labels = u.labels;
  for (double t : heights) {
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (leq_level(u.at(i, j), t)) uf.unite(i, j);
    Partition p = Partition::from_union_find(uf, n);
    if (d.levels.empty() || !(p == d.levels.back().partition))
      d.levels.push_back({t, std::move(p)});
  }
  return d;
}

namespace detail {

// Blocks in deterministic output order: labels sorted within each block,
// blocks ordered by first label.
inline std::vector<std::vector<std::string>> label_blocks(
    const Partition& p, const std::vector<std::string>& labels) {
  std::vector<std::vector<std::string>> out;
  for (const auto& b : p.blocks) {
    std::vector<std::string> names;
    for (int i : b) names.push_back(labels[i]);
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace detail

inline std::string render_text(const Dendrogram& d) {
  std::ostringstream oss;
  for (const auto& lv : d.levels) {
    oss << "t=" << lv.t << ":";
    for (const auto& block : detail::label_blocks(lv.partition, d.labels)) {
      oss << " {";
      for (size_t k = 0; k < block.size(); ++k) {
        if (k) oss << ",";
        oss << block[k];
      }
      oss << "}";
    }
    oss << "\n";
  }
  return oss.str();
}

inline nlohmann::json serialize(const Dendrogram& d) {
  nlohmann::json j;
  j["labels"] = d.labels;
  j["levels"] = nlohmann::json::array();
  for (const auto& lv : d.levels) {
    nlohmann::json level;
    level["t"] = lv.t;
    level["blocks"] = detail::label_blocks(lv.partition, d.labels);
    j["levels"].push_back(level);
  }
  return j;
}

inline Dendrogram deserialize(const nlohmann::json& j) {
  Dendrogram d;
  d.labels = j.at("labels").get<std::vector<std::string>>();
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(d.labels.size()); ++i)
    index[d.labels[i]] = i;
  for (const auto& level : j.at("levels")) {
    Dendrogram::Level lv;
    lv.t = level.at("t").get<double>();
    for (const auto& block : level.at("blocks")) {
      std::vector<int> ids;
      for (const auto& name : block) ids.push_back(index.at(name.get<std::string>()));
      lv.partition.blocks.push_back(std::move(ids));
    }
    lv.partition.canonicalize();
    d.levels.push_back(std::move(lv));
  }
  return d;
}

// Newick with cophenetic branch lengths: a node formed at height h sits at
// depth h/2, so a child formed at height c under a parent formed at height
// h gets branch length (h - c) / 2. Children are ordered by least label.
inline std::string to_newick(const Dendrogram& d) {
  struct Node {
    double height;
    std::string text;
    std::string min_label;
  };
  const int n = static_cast<int>(d.labels.size());
  // Current node per point (representative = any member point).
  std::vector<Node> node(n);
  for (int i = 0; i < n; ++i) node[i] = {0.0, d.labels[i], d.labels[i]};
  std::vector<int> rep(n);
  for (int i = 0; i < n; ++i) rep[i] = i;

  for (const auto& lv : d.levels) {
    if (lv.t == 0.0) continue;
    for (const auto& b : lv.partition.blocks) {
      std::set<int> parts;
      for (int x : b) parts.insert(rep[x]);
      if (parts.size() < 2) continue;
      std::vector<const Node*> children;
      for (int r : parts) children.push_back(&node[r]);
      std::sort(children.begin(), children.end(), [](const Node* a, const Node* b) {
        return a->min_label < b->min_label;
      });
      std::ostringstream oss;
      oss << "(";
      for (size_t k = 0; k < children.size(); ++k) {
        if (k) oss << ",";
        oss << children[k]->text << ":" << (lv.t - children[k]->height) / 2.0;
      }
      oss << ")";
      const int r0 = *parts.begin();
      node[r0] = {lv.t, oss.str(), children.front()->min_label};
      for (int x : b) rep[x] = r0;
    }
  }
  return node[rep[0]].text + ":0;";
}

}  // namespace unchain
