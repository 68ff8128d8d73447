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

#ifndef KDOM_RANDOMIZED_HPP
#define KDOM_RANDOMIZED_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "kdom/coverage.hpp"
#include "kdom/digraph.hpp"
#include "kdom/errors.hpp"
#include "kdom/greedy.hpp"
#include "kdom/rng.hpp"

namespace kdom {

namespace detail {

// log C(top, bottom); exact counts of this size overflow any integer type
// long before in-degrees reach the tens of thousands. A short product is
// summed term by term, because differences of log-gammas of huge arguments
// lose every significant digit.
inline double log_binomial(double top, double bottom) {
  const double small = std::min(bottom, top - bottom);
  if (small < 512.0) {
    double sum = 0.0;
    for (double i = 0.0; i < small; i += 1.0) sum += std::log((top - i) / (i + 1.0));
    return sum;
  }
  return std::lgamma(top + 1.0) - std::lgamma(bottom + 1.0) - std::lgamma(top - bottom + 1.0);
}

}  // namespace detail

// Inclusion probability for the random seed set, as a function of an
// in-degree parameter x >= k:
//
//   p(x) = 1 - ( C(floor(x), k-1) * (x - k + 2) )^(-1 / (x - k + 1))
//
// With x = min in-degree this is the probability minimizing the expected
// size of the random construction.
inline double inclusion_probability(double x, std::uint32_t k) {
  check_multiplicity(k);
  if (!(x >= static_cast<double>(k)) || !std::isfinite(x)) {
    throw InputError("inclusion probability needs a finite parameter x >= k (x=" +
                     std::to_string(x) + ", k=" + std::to_string(k) + ")");
  }
  const double kd = static_cast<double>(k);
  const double log_base = detail::log_binomial(std::floor(x), kd - 1.0) + std::log(x - kd + 2.0);
  return -std::expm1(-log_base / (x - kd + 1.0));
}

// Upper bound on the k-domination number of a digraph with n vertices and
// minimum in-degree delta >= k, with delta' = delta - k + 1:
//
//   n * (1 - delta' / ( C(delta, k-1)^(1/delta') * (1 + delta')^(1 + 1/delta') ))
inline double k_domination_upper_bound(std::uint64_t min_in_degree, std::uint32_t k,
                                       std::uint64_t n) {
  check_multiplicity(k);
  if (k > min_in_degree) {
    throw InputError("upper bound requires k <= minimum in-degree (k=" + std::to_string(k) +
                     ", min in-degree=" + std::to_string(min_in_degree) + ")");
  }
  const double delta = static_cast<double>(min_in_degree);
  const double dp = delta - static_cast<double>(k) + 1.0;
  const double log_denominator =
      detail::log_binomial(delta, static_cast<double>(k) - 1.0) / dp + (1.0 + 1.0 / dp) * std::log1p(dp);
  return static_cast<double>(n) * (1.0 - dp * std::exp(-log_denominator));
}

enum class DegreeParam { min_in, avg_in, med_in, max_in, explicit_value };

struct ProbabilityParam {
  DegreeParam mode = DegreeParam::min_in;
  // Used when mode == explicit_value.
  double explicit_x = 0.0;
};

struct ResolvedProbability {
  // Value of the chosen statistic before clamping.
  double raw_x = 0.0;
  // max(raw_x, k).
  double x = 0.0;
  double p = 0.0;
};

// Picks x from the in-degree statistics; any value below k is replaced by k.
inline ResolvedProbability resolve_probability(const DegreeStats& stats,
                                               const ProbabilityParam& param, std::uint32_t k) {
  check_multiplicity(k);
  ResolvedProbability r;
  switch (param.mode) {
    case DegreeParam::min_in: r.raw_x = static_cast<double>(stats.min_in); break;
    case DegreeParam::avg_in: r.raw_x = stats.avg_in; break;
    case DegreeParam::med_in: r.raw_x = stats.med_in; break;
    case DegreeParam::max_in: r.raw_x = static_cast<double>(stats.max_in); break;
    case DegreeParam::explicit_value: r.raw_x = param.explicit_x; break;
  }
  if (!std::isfinite(r.raw_x)) throw InputError("in-degree parameter must be finite");
  r.x = std::max(r.raw_x, static_cast<double>(k));
  r.p = inclusion_probability(r.x, k);
  return r;
}

struct RandomizedConfig {
  std::uint32_t k = 1;
  ProbabilityParam param;
  std::uint32_t runs = 10;
  std::uint64_t rng_seed = 0;
  // Residual tie rule of the two-criteria completion.
  TieBreak tie_break = TieBreak::lowest_id;
  // Runs are independent; > 1 spreads them across threads.
  unsigned threads = 1;
};

struct RandomizedResult {
  VertexSet best;
  std::size_t best_run = 0;
  std::vector<std::size_t> run_sizes;
  ResolvedProbability probability;
};

// One run: include each vertex independently with probability p (vertex
// order), complete with the two-criteria rule, reduce to a minimal set.
inline VertexSet randomized_run(const Digraph& graph, std::uint32_t k, double p,
                                std::uint64_t seed, TieBreak tie_break,
                                const ImportanceTable& importance) {
  Rng rng(seed);
  VertexSet initial;
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (uniform_unit(rng) < p) initial.push_back(v);
  }
  GreedyConfig cfg{.k = k, .rng_seed = seed, .tie_break = tie_break};
  return two_criteria_complete(graph, cfg, importance, initial, rng);
}

// Best of cfg.runs randomized runs. Run r draws from an mt19937_64 seeded
// with derive_seed(cfg.rng_seed, r), so the first R runs of a larger budget
// are the same runs. The smallest set wins, ties by lowest run index.
inline RandomizedResult randomized_solve(const Digraph& graph, const RandomizedConfig& cfg) {
  check_multiplicity(cfg.k);
  if (cfg.runs < 1) throw InputError("randomized solve needs at least one run");
  RandomizedResult result;
  result.probability = resolve_probability(in_degree_stats(graph), cfg.param, cfg.k);
  const ImportanceTable importance = importance_table(graph);

  std::vector<VertexSet> sets(cfg.runs);
  const auto run = [&](std::size_t r) {
    sets[r] = randomized_run(graph, cfg.k, result.probability.p, derive_seed(cfg.rng_seed, r),
                             cfg.tie_break, importance);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, cfg.runs));
  if (workers == 1) {
    for (std::size_t r = 0; r < cfg.runs; ++r) run(r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t r = next++; r < cfg.runs; r = next++) run(r);
      });
    }
  }

  result.run_sizes.reserve(cfg.runs);
  for (std::size_t r = 0; r < cfg.runs; ++r) {
    result.run_sizes.push_back(sets[r].size());
    if (sets[r].size() < sets[result.best_run].size()) result.best_run = r;
  }
  result.best = std::move(sets[result.best_run]);
  return result;
}

}  // namespace kdom

#endif  // KDOM_RANDOMIZED_HPP
