#include <catch_amalgamated.hpp>

#include <random>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "unchain/fixtures.hpp"
#include "unchain/rips.hpp"

using namespace unchain;

namespace {
const FiniteMetricSpace& two_nuclei() {
  static const FiniteMetricSpace space = fixture_by_name("two-nuclei").space();
  return space;
}
}  // namespace

TEST_CASE("rips dimension on the two-nuclei fixture") {
  const auto& space = two_nuclei();
  const auto n1 = space.indices_of({"x0", "a1", "a2", "a3"});
  const auto b1 = space.indices_of({"x0", "a1", "a2", "a3", "x1", "x2", "x3"});
  CHECK(rips_dim(space, n1, 1.0) == 3);   // the nucleus is a 4-clique
  CHECK(rips_dim(space, n1, 0.5) == 0);
  CHECK(rips_dim(space, b1, 1.0) == 3);
  CHECK(rips_dim(space, b1, 3.0) == 6);   // satellites join at 3
  CHECK(rips_dim(space, b1, 4.0) == 6);
  CHECK_THROWS_AS(rips_dim(space, std::vector<int>{}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("max cross simplex dimension on the two-nuclei fixture") {
  const auto& space = two_nuclei();
  const auto b1 = space.indices_of({"x0", "a1", "a2", "a3", "x1", "x2", "x3"});
  const auto b2 = space.indices_of({"y0", "b1", "b2", "b3", "y1", "y2", "y3"});
  CHECK_FALSE(max_cross_simplex_dim(space, b1, b2, 2.0).has_value());
  CHECK(max_cross_simplex_dim(space, b1, b2, 3.0) == 1);  // only {x0,y0}
  CHECK(max_cross_simplex_dim(space, b1, b2, 4.0) == 4);  // {N1, y0} / {x0, N2}
  CHECK(max_cross_simplex_dim(space, b1, b2, 5.0) == 7);  // N1 u N2
}

TEST_CASE("cross link admissibility follows the dimension condition") {
  const auto& space = two_nuclei();
  const auto n1 = space.indices_of({"x0", "a1", "a2", "a3"});
  const auto n2 = space.indices_of({"y0", "b1", "b2", "b3"});
  // At t=3 the only cross simplex is the bridge edge (dim 1) and both
  // nuclei have dim 3: blocked for alpha < 3, admissible from alpha = 3.
  CHECK_FALSE(cross_link_admissible(space, n1, n2, 3.0, 1));
  CHECK_FALSE(cross_link_admissible(space, n1, n2, 3.0, 2));
  CHECK(cross_link_admissible(space, n1, n2, 3.0, 3));
  // Condition i fails below the bridge length.
  CHECK_FALSE(cross_link_admissible(space, n1, n2, 2.0, 100));
  // A singleton block (dim 0) is always admissible once within reach.
  CHECK(cross_link_admissible(space, n1, {space.index_of("x1")}, 3.0, 1));
}

TEST_CASE("threshold graph rejects spaces beyond the bitmask width") {
  std::vector<std::string> labels;
  for (int i = 0; i < 65; ++i) labels.push_back(gen::pt(i));
  std::vector<std::vector<double>> m(65, std::vector<double>(65, 1.0));
  for (int i = 0; i < 65; ++i) m[i][i] = 0.0;
  const auto space = FiniteMetricSpace::from_distance_matrix(labels, m);
  CHECK_THROWS_AS(rips_dim(space, space.indices_of(labels), 1.0),
                  std::invalid_argument);
}

TEST_CASE("rips dim and cross dim match the enumeration oracle") {
  std::mt19937 rng(20240818);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const FiniteMetricSpace space = gen::random_space(rng, 10);
    const int n = space.size();
    std::vector<int> all(n);
    for (int j = 0; j < n; ++j) all[j] = j;
    // Random split into two non-empty halves.
    std::shuffle(all.begin(), all.end(), rng);
    std::uniform_int_distribution<int> cut_dist(1, n - 1);
    const int cut = n == 1 ? 1 : cut_dist(rng);
    std::vector<int> left(all.begin(), all.begin() + cut);
    std::vector<int> right(all.begin() + cut, all.end());
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    for (double t : distance_levels(space).levels) {
      CHECK(rips_dim(space, left, t) == oracle::brute_rips_dim(space, left, t));
      if (!right.empty()) {
        CHECK(max_cross_simplex_dim(space, left, right, t) ==
              oracle::brute_max_cross_dim(space, left, right, t));
        // Admissibility is exactly condition i plus the dimension bound.
        for (int alpha : {1, 2, 3}) {
          const auto cross = oracle::brute_max_cross_dim(space, left, right, t);
          const int dl = oracle::brute_rips_dim(space, left, t);
          const int dr = oracle::brute_rips_dim(space, right, t);
          const bool expect = cross.has_value() &&
                              alpha * *cross >= std::min(dl, dr);
          CHECK(cross_link_admissible(space, left, right, t, alpha) == expect);
        }
      }
      ++checked;
    }
  }
  CHECK(checked >= 200);
}
