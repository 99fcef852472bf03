#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "unchain/metric_space.hpp"

namespace unchain {

struct DbscanParams {
  double eps = 0.0;
  int min_pts = 1;
};

// Flat density-based labeling. Clusters are maximal density-connected sets;
// border points reachable from several clusters go to the cluster of the
// lexicographically least reaching core and are listed in border_ambiguous.
struct DbscanLabeling {
  std::vector<std::vector<int>> clusters;
  std::vector<int> noise;
  std::vector<int> border_ambiguous;
};

inline DbscanLabeling dbscan(const FiniteMetricSpace& space,
                             const DbscanParams& params) {
  if (params.eps < 0.0) throw std::invalid_argument("negative eps");
  if (params.min_pts < 1) throw std::invalid_argument("min_pts must be >= 1");
  const int n = space.size();

  // Neighborhoods include the point itself.
  std::vector<std::vector<int>> nbr(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq_level(space.dist(i, j), params.eps)) nbr[i].push_back(j);

  std::vector<bool> core(n, false);
  for (int i = 0; i < n; ++i)
    core[i] = static_cast<int>(nbr[i].size()) >= params.min_pts;

  // Cores within eps of each other are density-connected.
  UnionFind uf(n);
  for (int i = 0; i < n; ++i)
    if (core[i])
      for (int j : nbr[i])
        if (core[j]) uf.unite(i, j);

  std::map<int, int> cluster_of_root;
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < n; ++i)
    if (core[i]) {
      const int r = uf.find(i);
      if (!cluster_of_root.count(r)) {
        cluster_of_root[r] = static_cast<int>(clusters.size());
        clusters.emplace_back();
      }
      clusters[cluster_of_root[r]].push_back(i);
    }

  DbscanLabeling out;
  out.clusters = std::move(clusters);
  for (int i = 0; i < n; ++i) {
    if (core[i]) continue;
    // Cores reaching this point, by label.
    std::vector<int> reaching;
    for (int j : nbr[i])
      if (core[j]) reaching.push_back(j);
    if (reaching.empty()) {
      out.noise.push_back(i);
      continue;
    }
    std::sort(reaching.begin(), reaching.end(), [&](int a, int b) {
      return space.label(a) < space.label(b);
    });
    std::vector<int> touched;
    for (int j : reaching) {
      const int c = cluster_of_root.at(uf.find(j));
      if (std::find(touched.begin(), touched.end(), c) == touched.end())
        touched.push_back(c);
    }
    out.clusters[cluster_of_root.at(uf.find(reaching.front()))].push_back(i);
    if (touched.size() > 1) out.border_ambiguous.push_back(i);
  }
  for (auto& c : out.clusters) std::sort(c.begin(), c.end());
  std::sort(out.clusters.begin(), out.clusters.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

inline nlohmann::json serialize(const DbscanLabeling& labeling,
                                const FiniteMetricSpace& space) {
  auto names = [&](const std::vector<int>& ids) {
    std::vector<std::string> out;
    for (int i : ids) out.push_back(space.label(i));
    std::sort(out.begin(), out.end());
    return out;
  };
  nlohmann::json j;
  j["clusters"] = nlohmann::json::array();
  std::vector<std::vector<std::string>> cs;
  for (const auto& c : labeling.clusters) cs.push_back(names(c));
  std::sort(cs.begin(), cs.end());
  for (auto& c : cs) j["clusters"].push_back(c);
  j["noise"] = names(labeling.noise);
  j["border_ambiguous"] = names(labeling.border_ambiguous);
  return j;
}

}  // namespace unchain
