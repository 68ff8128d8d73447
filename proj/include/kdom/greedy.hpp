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

#ifndef KDOM_GREEDY_HPP
#define KDOM_GREEDY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "kdom/coverage.hpp"
#include "kdom/digraph.hpp"
#include "kdom/errors.hpp"
#include "kdom/rng.hpp"

namespace kdom {

enum class TieBreak { lowest_id, random };

struct GreedyConfig {
  std::uint32_t k = 1;
  // Drives the random choice among maximizers in deficiency_coverage_greedy
  // and, with TieBreak::random, the residual ties of two_criteria_greedy.
  std::uint64_t rng_seed = 0;
  TieBreak tie_break = TieBreak::lowest_id;
};

// Out-neighbourhood importance factor: f(v) = sum of d^-(u) over u in N^+(v).
struct ImportanceTable {
  std::vector<std::uint64_t> factor;

  std::uint64_t operator[](Vertex v) const noexcept { return factor[v]; }
};

inline ImportanceTable importance_table(const Digraph& graph) {
  ImportanceTable table;
  table.factor.assign(graph.num_vertices(), 0);
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    std::uint64_t sum = 0;
    for (const Vertex u : graph.out_neighbors(v)) sum += graph.in_degree(u);
    table.factor[v] = sum;
  }
  return table;
}

// Reduces a k-dominating set X to a minimal k-dominating subset. Candidates
// are tried in non-decreasing order of |N^+(v) \ X| (computed once against
// the input X, ties by vertex id); each is dropped if the rest still
// k-dominates. Throws InputError if X is not k-dominating.
inline VertexSet minimal_subset(const Digraph& graph, std::uint32_t k,
                                std::span<const Vertex> set) {
  if (!is_k_dominating(graph, k, set)) {
    throw InputError("minimal_subset: input set is not k-dominating");
  }
  CoverageState state(graph, k);
  for (const Vertex v : set) {
    if (!state.contains(v)) state.add(v);
  }
  VertexSet order = state.members();
  std::vector<std::size_t> outside(graph.num_vertices(), 0);
  for (const Vertex v : order) {
    for (const Vertex w : graph.out_neighbors(v)) outside[v] += state.contains(w) ? 0 : 1;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return outside[a] < outside[b]; });
  for (const Vertex v : order) {
    if (state.is_redundant(v)) state.remove(v);
  }
  return state.members();
}

namespace detail {

enum class Gain {
  // |N^+[u] \ C_k(X)|, closed out-neighbourhood.
  closed_neighbourhood,
  // l_k(u, X) + |N^+(u) \ C_k(X)|, the slot coverage number.
  slot_coverage,
};

// Grows the set held by `state` until it k-dominates the digraph. Each
// iteration scans V \ X for the maximal gain and lets `choose` pick one
// vertex among the maximizers (given in increasing id order).
//
// uncovered_out[u] = |N^+(u) \ C_k(X)| is maintained incrementally: when w
// enters C_k(X), each in-neighbour of w loses one. Every vertex enters C_k(X)
// at most once, so maintenance is O(m) overall and a full run is O(n^2 + m).
template <typename Choose>
void grow_to_dominating(CoverageState& state, Gain gain, Choose&& choose) {
  const Digraph& graph = state.graph();
  const std::size_t n = graph.num_vertices();
  std::vector<std::uint32_t> uncovered_out(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    std::uint32_t count = 0;
    for (const Vertex w : graph.out_neighbors(u)) count += state.is_covered(w) ? 0 : 1;
    uncovered_out[u] = count;
  }
  const auto on_covered = [&](Vertex w) {
    for (const Vertex u : graph.in_neighbors(w)) --uncovered_out[u];
  };

  std::vector<Vertex> best;
  while (!state.all_covered()) {
    best.clear();
    std::uint64_t best_gain = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (state.contains(u)) continue;
      std::uint64_t g = uncovered_out[u];
      if (gain == Gain::closed_neighbourhood) {
        g += state.is_covered(u) ? 0 : 1;
      } else {
        g += state.deficiency(u);
      }
      if (g > best_gain) {
        best_gain = g;
        best.clear();
      }
      if (g == best_gain && g > 0) best.push_back(u);
    }
    // An uncovered vertex always has positive gain, so best is non-empty.
    state.add(choose(std::span<const Vertex>(best)), on_covered);
  }
}

// Two-criteria choice: maximal importance factor, then the residual rule.
class TwoCriteriaChooser {
 public:
  TwoCriteriaChooser(const ImportanceTable& importance, TieBreak tie_break, Rng& rng)
      : importance_(&importance), tie_break_(tie_break), rng_(&rng) {}

  Vertex operator()(std::span<const Vertex> candidates) {
    std::uint64_t top = 0;
    for (const Vertex u : candidates) top = std::max(top, (*importance_)[u]);
    ties_.clear();
    for (const Vertex u : candidates) {
      if ((*importance_)[u] == top) ties_.push_back(u);
    }
    if (tie_break_ == TieBreak::lowest_id || ties_.size() == 1) return ties_.front();
    return ties_[uniform_index(*rng_, ties_.size())];
  }

 private:
  const ImportanceTable* importance_;
  TieBreak tie_break_;
  Rng* rng_;
  std::vector<Vertex> ties_;
};

}  // namespace detail

// Basic Greedy: repeatedly add a vertex maximizing |N^+[u] \ C_k(X)| (lowest
// id among ties), then reduce with minimal_subset.
inline VertexSet basic_greedy(const Digraph& graph, const GreedyConfig& cfg) {
  CoverageState state(graph, cfg.k);
  detail::grow_to_dominating(state, detail::Gain::closed_neighbourhood,
                             [](std::span<const Vertex> best) { return best.front(); });
  return minimal_subset(graph, cfg.k, state.members());
}

// Deficiency Coverage Greedy: maximize the slot coverage number, choosing
// uniformly at random among maximizers.
inline VertexSet deficiency_coverage_greedy(const Digraph& graph, const GreedyConfig& cfg) {
  CoverageState state(graph, cfg.k);
  Rng rng(cfg.rng_seed);
  detail::grow_to_dominating(state, detail::Gain::slot_coverage,
                             [&](std::span<const Vertex> best) {
                               return best[uniform_index(rng, best.size())];
                             });
  return minimal_subset(graph, cfg.k, state.members());
}

// Completes the seed set to a k-dominating set with the two-criteria rule
// and reduces the result. An empty seed gives two_criteria_greedy.
inline VertexSet two_criteria_complete(const Digraph& graph, const GreedyConfig& cfg,
                                       const ImportanceTable& importance,
                                       std::span<const Vertex> seed, Rng& rng) {
  CoverageState state(graph, cfg.k);
  for (const Vertex v : seed) {
    if (!state.contains(v)) state.add(v);
  }
  detail::grow_to_dominating(state, detail::Gain::slot_coverage,
                             detail::TwoCriteriaChooser(importance, cfg.tie_break, rng));
  return minimal_subset(graph, cfg.k, state.members());
}

// Two-Criteria Greedy: maximize the slot coverage number, break ties by the
// importance factor, then by cfg.tie_break.
inline VertexSet two_criteria_greedy(const Digraph& graph, const GreedyConfig& cfg) {
  check_multiplicity(cfg.k);
  const ImportanceTable importance = importance_table(graph);
  Rng rng(cfg.rng_seed);
  return two_criteria_complete(graph, cfg, importance, {}, rng);
}

}  // namespace kdom

#endif  // KDOM_GREEDY_HPP
