// Copyright 2026 The kdom Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kdom/reachability.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"

namespace kdom {
namespace {

WeightedRoadNetwork Path() {
  const std::vector<WeightedArc> arcs{{0, 1, 100}, {1, 2, 150}};
  return build_road_network(3, arcs);
}

TEST(BoundedSssp, PathDistances) {
  EXPECT_EQ(bounded_sssp(Path(), 0, 200), (std::vector<Reached>{{1, 100}}));
  EXPECT_EQ(bounded_sssp(Path(), 0, 250), (std::vector<Reached>{{1, 100}, {2, 250}}));
  EXPECT_TRUE(bounded_sssp(Path(), 2, 1000).empty());
}

TEST(BoundedSssp, UnitPath) {
  const std::vector<WeightedArc> arcs{{0, 1, 1.0}, {1, 2, 1.0}};
  const auto net = build_road_network(3, arcs);
  EXPECT_EQ(bounded_sssp(net, 0, 1.5), (std::vector<Reached>{{1, 1.0}}));
  EXPECT_EQ(bounded_sssp(net, 0, 2.0), (std::vector<Reached>{{1, 1.0}, {2, 2.0}}));
  EXPECT_TRUE(bounded_sssp(net, 0, 0.5).empty());
  EXPECT_EQ(build_reachability(net, {.radius_m = 1.5}), build_digraph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(build_reachability(net, {.radius_m = 1.5, .reverse_for_destinations = true}),
            build_digraph(3, {{1, 0}, {2, 1}}));
}

TEST(BoundedSssp, RejectsBadArguments) {
  EXPECT_THROW(bounded_sssp(Path(), 3, 100), InputError);
  EXPECT_THROW(bounded_sssp(Path(), 0, 0), InputError);
  EXPECT_THROW(bounded_sssp(Path(), 0, -5), InputError);
}

TEST(BuildReachability, PathExamples) {
  EXPECT_EQ(build_reachability(Path(), {.radius_m = 200}), build_digraph(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(build_reachability(Path(), {.radius_m = 250}), build_digraph(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(build_reachability(Path(), {.radius_m = 99}), build_digraph(3, {}));
}

TEST(BuildReachability, ReverseForDestinations) {
  EXPECT_EQ(build_reachability(Path(), {.radius_m = 250, .reverse_for_destinations = true}),
            build_digraph(3, {{1, 0}, {2, 0}, {2, 1}}));
}

TEST(BuildReachability, TwoWayStreetGivesBothArcs) {
  const std::vector<WeightedArc> arcs{{0, 1, 50}, {1, 0, 50}};
  EXPECT_EQ(build_reachability(build_road_network(2, arcs), {.radius_m = 50}),
            build_digraph(2, {{0, 1}, {1, 0}}));
}

TEST(BuildReachability, ZeroLengthArcs) {
  const std::vector<WeightedArc> arcs{{0, 1, 0}, {1, 2, 0}};
  EXPECT_EQ(build_reachability(build_road_network(3, arcs), {.radius_m = 1}),
            build_digraph(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST(BuildRoadNetwork, RejectsNegativeWeightNamingArc) {
  const std::vector<WeightedArc> arcs{{0, 1, 5}, {1, 2, -1}};
  try {
    build_road_network(3, arcs);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos) << e.what();
  }
}

TEST(BuildRoadNetwork, ParallelArcsKeepShortest) {
  const std::vector<WeightedArc> arcs{{0, 1, 300}, {0, 1, 120}};
  const auto net = build_road_network(2, arcs);
  ASSERT_EQ(net.arcs().size(), 1u);
  EXPECT_EQ(net.arcs()[0].weight, 120);
}

// Random integer-weighted networks against Floyd–Warshall, including radii
// that equal realised distances exactly.
TEST(ReachabilityProperty, MatchesAllPairsReference) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    const auto arcs = testing::random_weighted_arcs(n, 0.12, 30, rng);
    const auto net = build_road_network(n, arcs);
    const auto d = testing::floyd_warshall(n, arcs);
    std::vector<double> radii{7.5, 40.0};
    for (std::size_t u = 0; u < n && radii.size() < 4; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v && d[u][v] > 0 && d[u][v] != testing::kInf) {
          radii.push_back(d[u][v]);
          break;
        }
    for (const double r : radii) {
      std::vector<Arc> expected;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          if (u != v && d[u][v] <= r) expected.push_back({u, v});
      const Digraph reach = build_reachability(net, {.radius_m = r, .threads = 1u + trial % 3u});
      EXPECT_EQ(reach, build_digraph(n, expected)) << "trial " << trial << " r=" << r;
      for (Vertex u = 0; u < n; ++u) {
        for (const Reached& x : bounded_sssp(net, u, r)) EXPECT_EQ(x.distance, d[u][x.vertex]);
      }
    }
  }
}

TEST(ReachabilityProperty, MonotoneInRadius) {
  std::mt19937_64 rng(5);
  const std::size_t n = 60;
  const auto net = build_road_network(n, testing::random_weighted_arcs(n, 0.05, 100, rng));
  const auto small = build_reachability(net, {.radius_m = 80});
  const auto large = build_reachability(net, {.radius_m = 200});
  for (const Arc& a : small.arcs()) EXPECT_TRUE(large.has_arc(a.tail, a.head));
  EXPECT_LE(small.num_arcs(), large.num_arcs());
}

TEST(ReachabilityProperty, NotATransitiveClosureOfShortHops) {
  // Each hop is within the radius but the two-hop path is not.
  const std::vector<WeightedArc> arcs{{0, 1, 60}, {1, 2, 60}};
  const auto reach = build_reachability(build_road_network(3, arcs), {.radius_m = 100});
  EXPECT_FALSE(reach.has_arc(0, 2));
}

TEST(ReachabilityProperty, IndependentOfThreadCount) {
  std::mt19937_64 rng(12);
  const std::size_t n = 400;
  const auto net = build_road_network(n, testing::random_weighted_arcs(n, 0.01, 500, rng));
  const auto one = build_reachability(net, {.radius_m = 900, .threads = 1});
  for (unsigned t : {2u, 5u, 16u}) EXPECT_EQ(build_reachability(net, {.radius_m = 900, .threads = t}), one);
}

}  // namespace
}  // namespace kdom
