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

#ifndef KDOM_DIGRAPH_HPP
#define KDOM_DIGRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kdom/errors.hpp"

namespace kdom {

// Dense 0-based vertex id.
using Vertex = std::uint32_t;

// Ordered pair (tail, head), i.e. an arc tail -> head.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Immutable simple digraph in compressed sparse row form, stored twice: once
// by tail (out-lists) and once by head (in-lists). Both neighbour lists are
// sorted by vertex id. Safe for concurrent reads.
class Digraph {
 public:
  Digraph() = default;

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_arcs() const noexcept { return out_targets_.size(); }

  std::span<const Vertex> out_neighbors(Vertex v) const noexcept {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const Vertex> in_neighbors(Vertex v) const noexcept {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }

  std::size_t out_degree(Vertex v) const noexcept { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(Vertex v) const noexcept { return in_offsets_[v + 1] - in_offsets_[v]; }

  // Offset of v's first out-arc; arcs are numbered in (tail, head) order.
  std::size_t out_arc_begin(Vertex v) const noexcept { return out_offsets_[v]; }

  bool has_arc(Vertex tail, Vertex head) const noexcept {
    const auto out = out_neighbors(tail);
    return std::binary_search(out.begin(), out.end(), head);
  }

  // All arcs sorted by (tail, head).
  std::vector<Arc> arcs() const {
    std::vector<Arc> result;
    result.reserve(num_arcs());
    for (Vertex u = 0; u < n_; ++u) {
      for (const Vertex v : out_neighbors(u)) result.push_back({u, v});
    }
    return result;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_offsets_ == b.out_offsets_ && a.out_targets_ == b.out_targets_;
  }

 private:
  friend Digraph build_digraph(std::size_t n, std::span<const Arc> arcs, std::size_t* merged);
  friend Digraph reverse(const Digraph& graph);

  std::size_t n_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
};

// Builds a digraph from an arc list. Duplicate arcs are merged; when `merged`
// is non-null it receives the number of dropped duplicates. Throws InputError
// on an endpoint outside [0, n) or a self-loop.
inline Digraph build_digraph(std::size_t n, std::span<const Arc> arcs,
                             std::size_t* merged = nullptr) {
  if (n > std::size_t{UINT32_MAX}) throw InputError("vertex count exceeds 32-bit vertex ids");
  for (const Arc& a : arcs) {
    if (a.tail >= n || a.head >= n) {
      throw InputError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                       ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (a.tail == a.head) {
      throw InputError("self-loop (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                       ") is not allowed");
    }
  }

  std::vector<Arc> sorted;
  std::span<const Arc> unique_arcs = arcs;
  if (!std::is_sorted(arcs.begin(), arcs.end()) ||
      std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
    sorted.assign(arcs.begin(), arcs.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    unique_arcs = sorted;
  }
  if (merged != nullptr) *merged = arcs.size() - unique_arcs.size();

  Digraph g;
  g.n_ = n;
  const std::size_t m = unique_arcs.size();
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const Arc& a : unique_arcs) {
    ++g.out_offsets_[a.tail + 1];
    ++g.in_offsets_[a.head + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.out_offsets_[v + 1] += g.out_offsets_[v];
    g.in_offsets_[v + 1] += g.in_offsets_[v];
  }
  g.out_targets_.resize(m);
  g.in_sources_.resize(m);
  std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  // Arcs are in (tail, head) order, so both fills come out sorted.
  for (std::size_t i = 0; i < m; ++i) {
    const Arc& a = unique_arcs[i];
    g.out_targets_[i] = a.head;
    g.in_sources_[in_fill[a.head]++] = a.tail;
  }
  return g;
}

inline Digraph build_digraph(std::size_t n, std::initializer_list<Arc> arcs) {
  return build_digraph(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

// Every arc (u,v) becomes (v,u).
inline Digraph reverse(const Digraph& graph) {
  Digraph r;
  r.n_ = graph.n_;
  r.out_offsets_ = graph.in_offsets_;
  r.out_targets_ = graph.in_sources_;
  r.in_offsets_ = graph.out_offsets_;
  r.in_sources_ = graph.out_targets_;
  return r;
}

// In-degree summary. avg_in and med_in are real-valued: the median of an
// even-length sequence is the mean of its two middle elements.
struct DegreeStats {
  std::size_t min_in = 0;
  std::size_t max_in = 0;
  double avg_in = 0.0;
  double med_in = 0.0;
  // Vertices with no in-neighbour at all.
  std::size_t zero_in = 0;
};

inline DegreeStats in_degree_stats(const Digraph& graph) {
  const std::size_t n = graph.num_vertices();
  if (n == 0) throw InputError("in-degree statistics need at least one vertex");
  std::vector<std::size_t> degrees(n);
  for (Vertex v = 0; v < n; ++v) degrees[v] = graph.in_degree(v);

  DegreeStats s;
  const auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
  s.min_in = *lo;
  s.max_in = *hi;
  s.avg_in = static_cast<double>(graph.num_arcs()) / static_cast<double>(n);
  s.zero_in = static_cast<std::size_t>(std::count(degrees.begin(), degrees.end(), 0));

  const auto upper = degrees.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(degrees.begin(), upper, degrees.end());
  if (n % 2 == 1) {
    s.med_in = static_cast<double>(*upper);
  } else {
    const auto lower = std::max_element(degrees.begin(), upper);
    s.med_in = (static_cast<double>(*lower) + static_cast<double>(*upper)) / 2.0;
  }
  return s;
}

}  // namespace kdom

#endif  // KDOM_DIGRAPH_HPP
