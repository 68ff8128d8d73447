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

#ifndef KDOM_COVERAGE_HPP
#define KDOM_COVERAGE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kdom/digraph.hpp"
#include "kdom/errors.hpp"

namespace kdom {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

inline void check_multiplicity(std::uint32_t k) {
  if (k < 1) throw InputError("domination multiplicity k must be at least 1");
}

// Incremental bookkeeping of a vertex set X and the set C_k(X) of vertices it
// k-covers. A vertex is k-covered when it lies in X or has at least k
// in-neighbours in X.
//
// hits(v) is the exact number of in-neighbours of v in X (never clamped at k),
// so remove() is the exact inverse of add().
class CoverageState {
 public:
  CoverageState(const Digraph& graph, std::uint32_t k)
      : graph_(&graph),
        k_(k),
        in_set_(graph.num_vertices(), 0),
        hits_(graph.num_vertices(), 0) {
    check_multiplicity(k);
  }

  const Digraph& graph() const noexcept { return *graph_; }
  std::uint32_t k() const noexcept { return k_; }

  bool contains(Vertex v) const noexcept { return in_set_[v] != 0; }
  std::uint32_t hits(Vertex v) const noexcept { return hits_[v]; }
  bool is_covered(Vertex v) const noexcept { return in_set_[v] != 0 || hits_[v] >= k_; }

  std::size_t size() const noexcept { return size_; }
  std::size_t covered_count() const noexcept { return covered_count_; }
  bool all_covered() const noexcept { return covered_count_ == graph_->num_vertices(); }

  // max(0, k - hits(v)), defined for v outside X.
  std::uint32_t deficiency(Vertex v) const {
    if (contains(v)) {
      throw std::logic_error("deficiency of vertex " + std::to_string(v) + " which is in X");
    }
    return hits_[v] >= k_ ? 0 : k_ - hits_[v];
  }

  VertexSet members() const {
    VertexSet out;
    out.reserve(size_);
    for (Vertex v = 0; v < in_set_.size(); ++v) {
      if (in_set_[v] != 0) out.push_back(v);
    }
    return out;
  }

  void add(Vertex v) {
    add(v, [](Vertex) {});
  }

  // on_covered(w) fires once for every vertex that enters C_k(X).
  template <typename OnCovered>
  void add(Vertex v, OnCovered&& on_covered) {
    if (contains(v)) throw std::logic_error("vertex " + std::to_string(v) + " is already in X");
    const bool was_covered = hits_[v] >= k_;
    in_set_[v] = 1;
    ++size_;
    if (!was_covered) {
      ++covered_count_;
      on_covered(v);
    }
    for (const Vertex w : graph_->out_neighbors(v)) {
      if (++hits_[w] == k_ && in_set_[w] == 0) {
        ++covered_count_;
        on_covered(w);
      }
    }
  }

  void remove(Vertex v) {
    remove(v, [](Vertex) {});
  }

  // on_uncovered(w) fires once for every vertex that leaves C_k(X).
  template <typename OnUncovered>
  void remove(Vertex v, OnUncovered&& on_uncovered) {
    if (!contains(v)) throw std::logic_error("vertex " + std::to_string(v) + " is not in X");
    in_set_[v] = 0;
    --size_;
    if (hits_[v] < k_) {
      --covered_count_;
      on_uncovered(v);
    }
    for (const Vertex w : graph_->out_neighbors(v)) {
      if (hits_[w]-- == k_ && in_set_[w] == 0) {
        --covered_count_;
        on_uncovered(w);
      }
    }
  }

  // True when v is in X and C_k(X \ {v}) = C_k(X). With every vertex covered
  // this is exactly "v is redundant with respect to X".
  bool is_redundant(Vertex v) const noexcept {
    if (!contains(v) || hits_[v] < k_) return false;
    for (const Vertex w : graph_->out_neighbors(v)) {
      if (in_set_[w] == 0 && hits_[w] == k_) return false;
    }
    return true;
  }

 private:
  const Digraph* graph_;
  std::uint32_t k_;
  std::vector<std::uint8_t> in_set_;
  std::vector<std::uint32_t> hits_;
  std::size_t size_ = 0;
  std::size_t covered_count_ = 0;
};

namespace detail {

inline std::vector<std::uint8_t> membership(const Digraph& graph, std::span<const Vertex> set) {
  std::vector<std::uint8_t> in_set(graph.num_vertices(), 0);
  for (const Vertex v : set) {
    if (v >= graph.num_vertices()) {
      throw InputError("vertex " + std::to_string(v) + " is outside the digraph");
    }
    in_set[v] = 1;
  }
  return in_set;
}

// |N^-(v) ∩ X| for every v, recounted from the in-lists.
inline std::vector<std::uint32_t> count_hits(const Digraph& graph,
                                             const std::vector<std::uint8_t>& in_set) {
  std::vector<std::uint32_t> hits(graph.num_vertices(), 0);
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    for (const Vertex u : graph.in_neighbors(v)) hits[v] += in_set[u];
  }
  return hits;
}

}  // namespace detail

// Stateless check that every vertex lies in X or has >= k in-neighbours in X.
inline bool is_k_dominating(const Digraph& graph, std::uint32_t k, std::span<const Vertex> set) {
  check_multiplicity(k);
  const auto in_set = detail::membership(graph, set);
  const auto hits = detail::count_hits(graph, in_set);
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (in_set[v] == 0 && hits[v] < k) return false;
  }
  return true;
}

// True iff no single vertex can leave X without breaking k-domination.
// Throws InputError if X is not k-dominating to begin with.
inline bool is_minimal_k_dominating(const Digraph& graph, std::uint32_t k,
                                    std::span<const Vertex> set) {
  if (!is_k_dominating(graph, k, set)) throw InputError("vertex set is not k-dominating");
  const auto in_set = detail::membership(graph, set);
  const auto hits = detail::count_hits(graph, in_set);
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (in_set[v] == 0 || hits[v] < k) continue;
    bool needed = false;
    for (const Vertex w : graph.out_neighbors(v)) {
      if (in_set[w] == 0 && hits[w] == k) {
        needed = true;
        break;
      }
    }
    if (!needed) return false;
  }
  return true;
}

}  // namespace kdom

#endif  // KDOM_COVERAGE_HPP
