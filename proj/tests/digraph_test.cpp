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

#include "kdom/digraph.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"

namespace kdom {
namespace {

TEST(BuildDigraph, OutStarDegrees) {
  const Digraph g = build_digraph(3, {{0, 1}, {0, 2}});
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_arcs(), 2u);
  EXPECT_EQ(g.out_degree(0), 2u);
  EXPECT_EQ(g.in_degree(1), 1u);
  EXPECT_EQ(g.in_degree(2), 1u);
  EXPECT_EQ(g.in_degree(0), 0u);
}

TEST(BuildDigraph, SingleVertex) {
  const Digraph g = build_digraph(1, {});
  EXPECT_EQ(g.num_vertices(), 1u);
  EXPECT_EQ(g.num_arcs(), 0u);
}

TEST(BuildDigraph, TwoCycle) {
  const Digraph g = build_digraph(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.num_arcs(), 2u);
  for (Vertex v : {0u, 1u}) {
    EXPECT_EQ(g.out_degree(v), 1u);
    EXPECT_EQ(g.in_degree(v), 1u);
  }
}

TEST(BuildDigraph, MergesDuplicatesAndSortsNeighbours) {
  std::size_t merged = 0;
  const std::vector<Arc> arcs{{2, 0}, {0, 2}, {0, 1}, {0, 2}, {2, 0}};
  const Digraph g = build_digraph(3, arcs, &merged);
  EXPECT_EQ(merged, 2u);
  EXPECT_EQ(g.num_arcs(), 3u);
  const auto out0 = g.out_neighbors(0);
  EXPECT_EQ(std::vector<Vertex>(out0.begin(), out0.end()), (std::vector<Vertex>{1, 2}));
}

TEST(BuildDigraph, RejectsOutOfRangeEndpoint) {
  EXPECT_THROW(build_digraph(2, {{0, 2}}), InputError);
}

TEST(BuildDigraph, RejectsSelfLoopNamingPair) {
  try {
    build_digraph(3, {{0, 1}, {1, 1}});
    FAIL() << "self-loop accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,1)"), std::string::npos);
  }
}

TEST(InDegreeStats, PathOfThree) {
  const DegreeStats s = in_degree_stats(build_digraph(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(s.min_in, 0u);
  EXPECT_EQ(s.max_in, 2u);
  EXPECT_DOUBLE_EQ(s.avg_in, 1.0);
  EXPECT_DOUBLE_EQ(s.med_in, 1.0);
  EXPECT_EQ(s.zero_in, 1u);
}

TEST(InDegreeStats, EvenMedianIsMeanOfMiddlePair) {
  // in-degrees 0,1,2,3
  const Digraph g = build_digraph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
  const DegreeStats s = in_degree_stats(g);
  EXPECT_DOUBLE_EQ(s.med_in, 1.5);
  EXPECT_DOUBLE_EQ(s.avg_in, 1.5);
}

TEST(InDegreeStats, ConstantSequence) {
  // complete digraph on 6 vertices: every in-degree is 5
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = 0; v < 6; ++v)
      if (u != v) arcs.push_back({u, v});
  const DegreeStats s = in_degree_stats(build_digraph(6, arcs));
  EXPECT_EQ(s.min_in, 5u);
  EXPECT_EQ(s.max_in, 5u);
  EXPECT_DOUBLE_EQ(s.avg_in, 5.0);
  EXPECT_DOUBLE_EQ(s.med_in, 5.0);
}

TEST(InDegreeStats, EmptyDigraphIsAnError) {
  EXPECT_THROW(in_degree_stats(build_digraph(0, {})), InputError);
}

TEST(Reverse, FlipsArcs) {
  const Digraph r = reverse(build_digraph(3, {{0, 1}, {0, 2}}));
  EXPECT_EQ(r.arcs(), (std::vector<Arc>{{1, 0}, {2, 0}}));
  EXPECT_EQ(reverse(build_digraph(0, {})).num_arcs(), 0u);
  const Digraph two = build_digraph(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(reverse(two), two);
}

TEST(DigraphProperty, RandomInstancesKeepInvariants) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const double p = (rng() % 100) / 100.0;
    const auto arcs = testing::random_arcs(n, p, rng);
    const Digraph g = build_digraph(n, arcs);
    std::size_t out_sum = 0, in_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
      out_sum += g.out_degree(v);
      in_sum += g.in_degree(v);
    }
    EXPECT_EQ(out_sum, g.num_arcs());
    EXPECT_EQ(in_sum, g.num_arcs());

    // out-list and in-list membership agree on sampled ordered pairs
    for (int q = 0; q < 200; ++q) {
      const auto u = static_cast<Vertex>(rng() % n);
      const auto v = static_cast<Vertex>(rng() % n);
      const auto in = g.in_neighbors(v);
      EXPECT_EQ(g.has_arc(u, v), std::find(in.begin(), in.end(), u) != in.end());
    }

    const Digraph r = reverse(g);
    for (Vertex v = 0; v < n; ++v) EXPECT_EQ(r.in_degree(v), g.out_degree(v));
    EXPECT_EQ(reverse(r), g);

    const DegreeStats s = in_degree_stats(g);
    EXPECT_LE(static_cast<double>(s.min_in), s.med_in);
    EXPECT_LE(s.med_in, static_cast<double>(s.max_in));
    EXPECT_LE(static_cast<double>(s.min_in), s.avg_in);
    EXPECT_LE(s.avg_in, static_cast<double>(s.max_in));
    EXPECT_NEAR(s.avg_in * static_cast<double>(n), static_cast<double>(g.num_arcs()), 1e-9);
  }
}

}  // namespace
}  // namespace kdom
