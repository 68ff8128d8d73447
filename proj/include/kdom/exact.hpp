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

#ifndef KDOM_EXACT_HPP
#define KDOM_EXACT_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "kdom/coverage.hpp"
#include "kdom/digraph.hpp"
#include "kdom/errors.hpp"
#include "kdom/greedy.hpp"

namespace kdom {

enum class ExactStatus { optimal, timeout_best_known };

struct ExactResult {
  std::size_t size = 0;
  VertexSet witness;
  ExactStatus status = ExactStatus::optimal;
  std::uint64_t nodes = 0;
};

namespace detail {

// Depth-first include/exclude search over a fixed vertex order. The incumbent
// starts from the two-criteria greedy set.
class BranchAndBound {
 public:
  using Clock = std::chrono::steady_clock;

  BranchAndBound(const Digraph& graph, std::uint32_t k, Clock::time_point deadline)
      : graph_(graph), k_(k), state_(graph, k), deadline_(deadline) {
    const std::size_t n = graph.num_vertices();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return graph.out_degree(a) + graph.in_degree(a) > graph.out_degree(b) + graph.in_degree(b);
    });
    rank_.resize(n);
    for (std::size_t i = 0; i < n; ++i) rank_[order_[i]] = i;
    best_ = two_criteria_greedy(graph, GreedyConfig{.k = k});
  }

  ExactResult run() {
    search(0);
    ExactResult r;
    r.size = best_.size();
    r.witness = best_;
    r.status = timed_out_ ? ExactStatus::timeout_best_known : ExactStatus::optimal;
    r.nodes = nodes_;
    return r;
  }

 private:
  bool undecided(Vertex v, std::size_t depth) const { return rank_[v] >= depth; }

  // Number of vertices that can still join X among v's in-neighbours.
  std::size_t available_in(Vertex v, std::size_t depth) const {
    std::size_t count = 0;
    for (const Vertex u : graph_.in_neighbors(v)) {
      if (undecided(u, depth)) ++count;
    }
    return count;
  }

  std::uint32_t slot_gain(Vertex u) const {
    std::uint32_t gain = state_.deficiency(u);
    for (const Vertex w : graph_.out_neighbors(u)) gain += state_.is_covered(w) ? 0 : 1;
    return gain;
  }

  // Lower bound on how many more vertices X needs, or kInfeasible.
  //  - a single uncovered vertex needs one more vertex if it may still join
  //    X, otherwise its full deficiency from in-neighbours;
  //  - one addition fills at most max slot_gain of the remaining deficiency.
  static constexpr std::size_t kInfeasible = static_cast<std::size_t>(-1);

  std::size_t lower_bound(std::size_t depth) const {
    const std::size_t n = graph_.num_vertices();
    std::size_t single = 0;
    std::uint64_t demand = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (state_.is_covered(v)) continue;
      const std::uint32_t def = state_.deficiency(v);
      demand += def;
      if (undecided(v, depth)) {
        single = std::max<std::size_t>(single, 1);
      } else {
        if (available_in(v, depth) < def) return kInfeasible;
        single = std::max<std::size_t>(single, def);
      }
    }
    if (demand == 0) return 0;
    std::uint64_t best_gain = 0;
    for (std::size_t i = depth; i < n; ++i) {
      best_gain = std::max<std::uint64_t>(best_gain, slot_gain(order_[i]));
    }
    if (best_gain == 0) return kInfeasible;
    return std::max<std::size_t>(single, (demand + best_gain - 1) / best_gain);
  }

  bool out_of_time() {
    if ((++nodes_ & 1023) == 0 && Clock::now() >= deadline_) timed_out_ = true;
    return timed_out_;
  }

  void search(std::size_t depth) {
    if (out_of_time()) return;
    if (state_.all_covered()) {
      if (state_.size() < best_.size()) best_ = state_.members();
      return;
    }
    if (depth == graph_.num_vertices()) return;
    const std::size_t bound = lower_bound(depth);
    if (bound == kInfeasible || state_.size() + bound >= best_.size()) return;

    const Vertex u = order_[depth];
    // Covered with every out-neighbour covered: including u changes nothing
    // now or later, since coverage only grows along a branch.
    if (slot_gain(u) == 0) {
      search(depth + 1);
      return;
    }
    state_.add(u);
    search(depth + 1);
    state_.remove(u);
    // If u stays out, its deficiency must come from later in-neighbours.
    if (!state_.is_covered(u) && available_in(u, depth + 1) < state_.deficiency(u)) return;
    search(depth + 1);
  }

  const Digraph& graph_;
  std::uint32_t k_;
  CoverageState state_;
  Clock::time_point deadline_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> rank_;
  VertexSet best_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace detail

// Minimum k-dominating set by branch-and-bound; intended for small digraphs
// (a few dozen vertices). On timeout returns the best set found so far.
inline ExactResult exact_gamma_k(const Digraph& graph, std::uint32_t k,
                                 std::chrono::duration<double> budget) {
  check_multiplicity(k);
  if (!(budget.count() > 0.0)) throw InputError("exact solver time budget must be positive");
  const auto deadline =
      detail::BranchAndBound::Clock::now() +
      std::chrono::duration_cast<detail::BranchAndBound::Clock::duration>(
          std::min(budget, std::chrono::duration<double>(1e9)));
  return detail::BranchAndBound(graph, k, deadline).run();
}

struct LpSummary {
  std::size_t variables = 0;
  std::size_t constraints = 0;
};

namespace detail {

// Appends a term, starting a continuation line when the current one is long.
inline void append_lp_term(std::ostream& out, std::size_t& line_length, const std::string& term) {
  constexpr std::size_t kMaxLine = 250;
  if (line_length + term.size() > kMaxLine) {
    out << "\n   ";
    line_length = 3;
  }
  out << term;
  line_length += term.size();
}

}  // namespace detail

// Writes the 0/1 program
//
//   minimize  x0 + ... + x{n-1}
//   s.t.      k x_i + sum_{j in N^-(i)} x_j >= k   for every vertex i
//             x_i binary
//
// in LP file format. Rows appear in vertex order, in-neighbours sorted.
inline LpSummary write_lp(const Digraph& graph, std::uint32_t k, std::ostream& out) {
  check_multiplicity(k);
  const std::size_t n = graph.num_vertices();
  if (n == 0) throw InputError("cannot export an LP model without variables");
  const auto var = [](Vertex v) { return "x" + std::to_string(v); };

  out << "\\ minimum " << k << "-dominating set, " << n << " vertices, " << graph.num_arcs()
      << " arcs\n";
  out << "Minimize\n";
  std::string line = " obj: ";
  out << line;
  std::size_t length = line.size();
  for (Vertex v = 0; v < n; ++v) detail::append_lp_term(out, length, (v == 0 ? "" : " + ") + var(v));
  out << "\nSubject To\n";
  const std::string coef = k == 1 ? "" : std::to_string(k) + " ";
  for (Vertex v = 0; v < n; ++v) {
    line = " c" + std::to_string(v) + ": ";
    out << line;
    length = line.size();
    detail::append_lp_term(out, length, coef + var(v));
    for (const Vertex u : graph.in_neighbors(v)) detail::append_lp_term(out, length, " + " + var(u));
    detail::append_lp_term(out, length, " >= " + std::to_string(k));
    out << '\n';
  }
  out << "Binary\n";
  length = 0;
  for (Vertex v = 0; v < n; ++v) detail::append_lp_term(out, length, " " + var(v));
  out << "\nEnd\n";
  return {n, n};
}

inline LpSummary export_lp(const Digraph& graph, std::uint32_t k,
                           const std::filesystem::path& path) {
  if (graph.num_vertices() == 0) throw InputError("cannot export an LP model without variables");
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  const LpSummary summary = write_lp(graph, k, out);
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
  return summary;
}

}  // namespace kdom

#endif  // KDOM_EXACT_HPP
