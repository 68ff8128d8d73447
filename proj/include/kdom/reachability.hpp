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

#ifndef KDOM_REACHABILITY_HPP
#define KDOM_REACHABILITY_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kdom/digraph.hpp"
#include "kdom/errors.hpp"

namespace kdom {

struct WeightedArc {
  Vertex tail = 0;
  Vertex head = 0;
  double weight = 0.0;
};

// Road network: a digraph plus a non-negative length (metres) per arc.
// Weights are stored in the digraph's out-arc order.
class WeightedRoadNetwork {
 public:
  WeightedRoadNetwork() = default;

  const Digraph& graph() const noexcept { return graph_; }
  std::size_t num_vertices() const noexcept { return graph_.num_vertices(); }

  std::span<const double> out_weights(Vertex v) const noexcept {
    return {weights_.data() + graph_.out_arc_begin(v), graph_.out_degree(v)};
  }

  // All arcs with weights, sorted by (tail, head).
  std::vector<WeightedArc> arcs() const {
    std::vector<WeightedArc> out;
    out.reserve(graph_.num_arcs());
    for (Vertex u = 0; u < graph_.num_vertices(); ++u) {
      const auto heads = graph_.out_neighbors(u);
      const auto w = out_weights(u);
      for (std::size_t i = 0; i < heads.size(); ++i) out.push_back({u, heads[i], w[i]});
    }
    return out;
  }

 private:
  friend WeightedRoadNetwork build_road_network(std::size_t n, std::span<const WeightedArc> arcs);

  Digraph graph_;
  std::vector<double> weights_;
};

// Parallel arcs keep their smallest weight. Throws InputError on negative or
// non-finite weights (naming the arc) and on anything build_digraph rejects.
inline WeightedRoadNetwork build_road_network(std::size_t n, std::span<const WeightedArc> arcs) {
  std::vector<Arc> plain;
  plain.reserve(arcs.size());
  for (const WeightedArc& a : arcs) {
    if (!(a.weight >= 0.0) || !std::isfinite(a.weight)) {
      throw InputError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                       ") has invalid weight " + std::to_string(a.weight) +
                       "; lengths must be finite and non-negative");
    }
    plain.push_back({a.tail, a.head});
  }
  WeightedRoadNetwork net;
  net.graph_ = build_digraph(n, plain);
  net.weights_.assign(net.graph_.num_arcs(), std::numeric_limits<double>::infinity());
  for (const WeightedArc& a : arcs) {
    const auto heads = net.graph_.out_neighbors(a.tail);
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(heads.begin(), heads.end(), a.head) - heads.begin());
    double& slot = net.weights_[net.graph_.out_arc_begin(a.tail) + pos];
    slot = std::min(slot, a.weight);
  }
  return net;
}

struct ReachabilityParams {
  double radius_m = 0.0;
  // Reverse every arc so that k-domination asks for k reachable facilities
  // from each vertex rather than k facilities that reach it.
  bool reverse_for_destinations = false;
  unsigned threads = 1;
};

struct Reached {
  Vertex vertex = 0;
  double distance = 0.0;

  friend bool operator==(const Reached&, const Reached&) = default;
};

namespace detail {

// Dijkstra with a binary heap, stopped once the smallest tentative distance
// exceeds the radius. Reuses its arrays across sources.
class BoundedSearch {
 public:
  explicit BoundedSearch(const WeightedRoadNetwork& net)
      : net_(&net), dist_(net.num_vertices(), kUnreached) {}

  // Vertices v != source with d(source, v) <= radius, sorted by id.
  std::vector<Reached> run(Vertex source, double radius) {
    using Entry = std::pair<double, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist_[source] = 0.0;
    touched_.push_back(source);
    heap.push({0.0, source});
    std::vector<Reached> reached;
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d > radius) break;
      if (d > dist_[u]) continue;
      if (u != source) reached.push_back({u, d});
      const auto heads = net_->graph().out_neighbors(u);
      const auto weights = net_->out_weights(u);
      for (std::size_t i = 0; i < heads.size(); ++i) {
        const double nd = d + weights[i];
        const Vertex v = heads[i];
        if (nd < dist_[v] && nd <= radius) {
          if (dist_[v] == kUnreached) touched_.push_back(v);
          dist_[v] = nd;
          heap.push({nd, v});
        }
      }
    }
    for (const Vertex v : touched_) dist_[v] = kUnreached;
    touched_.clear();
    std::sort(reached.begin(), reached.end(),
              [](const Reached& a, const Reached& b) { return a.vertex < b.vertex; });
    return reached;
  }

 private:
  static constexpr double kUnreached = std::numeric_limits<double>::infinity();

  const WeightedRoadNetwork* net_;
  std::vector<double> dist_;
  std::vector<Vertex> touched_;
};

inline void check_radius(double radius_m) {
  if (!(radius_m > 0.0) || !std::isfinite(radius_m)) {
    throw InputError("reachability radius must be a positive finite number of metres");
  }
}

}  // namespace detail

// Exact shortest-path distances from `source` to every other vertex within
// radius_m (inclusive), sorted by vertex id.
inline std::vector<Reached> bounded_sssp(const WeightedRoadNetwork& net, Vertex source,
                                         double radius_m) {
  detail::check_radius(radius_m);
  if (source >= net.num_vertices()) {
    throw InputError("source vertex " + std::to_string(source) + " is outside the network");
  }
  return detail::BoundedSearch(net).run(source, radius_m);
}

// Reachability digraph: arc (u,v) iff u != v and d(u,v) <= radius_m, reversed
// when params.reverse_for_destinations is set. Sources are sharded across
// params.threads workers; each writes its own out-list, so the result does
// not depend on the thread count.
inline Digraph build_reachability(const WeightedRoadNetwork& net, const ReachabilityParams& params) {
  detail::check_radius(params.radius_m);
  const std::size_t n = net.num_vertices();
  std::vector<std::vector<Vertex>> out_lists(n);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    detail::BoundedSearch search(net);
    for (std::size_t s = next++; s < n; s = next++) {
      const auto reached = search.run(static_cast<Vertex>(s), params.radius_m);
      out_lists[s].reserve(reached.size());
      for (const Reached& r : reached) out_lists[s].push_back(r.vertex);
    }
  };
  const unsigned workers = std::max(1u, params.threads);
  if (workers == 1 || n < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  std::size_t m = 0;
  for (const auto& list : out_lists) m += list.size();
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (Vertex u = 0; u < n; ++u) {
    for (const Vertex v : out_lists[u]) arcs.push_back({u, v});
    std::vector<Vertex>().swap(out_lists[u]);
  }
  Digraph reach = build_digraph(n, arcs);
  return params.reverse_for_destinations ? reverse(reach) : reach;
}

}  // namespace kdom

#endif  // KDOM_REACHABILITY_HPP
