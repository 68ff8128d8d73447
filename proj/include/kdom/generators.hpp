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

#ifndef KDOM_GENERATORS_HPP
#define KDOM_GENERATORS_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kdom/digraph.hpp"
#include "kdom/errors.hpp"
#include "kdom/rng.hpp"

namespace kdom {

struct ErConfig {
  std::size_t n = 0;
  double p_arc = 0.0;
  std::uint64_t rng_seed = 0;
};

// Below this arc probability the generator jumps between successes with
// geometric skips instead of flipping one coin per ordered pair.
inline constexpr double kSkipSamplingThreshold = 0.01;

// Erdős–Rényi digraph: each of the n(n-1) ordered pairs (u,v), u != v, is an
// arc independently with probability p_arc.
//
// Pairs are visited in row-major order: index i maps to u = i / (n-1) and
// j = i % (n-1), with v = j if j < u else j + 1. Dense regimes draw one
// uniform_unit per pair; sparse regimes (p_arc <= 0.01) draw one
// uniform_unit per arc and skip floor(log(U) / log(1 - p_arc)) pairs.
inline Digraph generate_er(const ErConfig& cfg) {
  if (cfg.n < 1) throw InputError("Erdős–Rényi digraph needs n >= 1");
  if (!(cfg.p_arc >= 0.0 && cfg.p_arc <= 1.0)) {
    throw InputError("arc probability must lie in [0,1], got " + std::to_string(cfg.p_arc));
  }
  const std::uint64_t row = cfg.n - 1;
  const std::uint64_t pairs = static_cast<std::uint64_t>(cfg.n) * row;
  const auto pair_arc = [row](std::uint64_t i) {
    const auto u = static_cast<Vertex>(i / row);
    const auto j = static_cast<Vertex>(i % row);
    return Arc{u, j < u ? j : j + 1};
  };

  Rng rng(cfg.rng_seed);
  std::vector<Arc> arcs;
  if (cfg.p_arc == 0.0 || pairs == 0) {
    // empty
  } else if (cfg.p_arc <= kSkipSamplingThreshold) {
    arcs.reserve(static_cast<std::size_t>(static_cast<double>(pairs) * cfg.p_arc * 1.1) + 16);
    const double log_q = std::log1p(-cfg.p_arc);
    std::uint64_t i = 0;
    while (true) {
      const double skip = std::floor(std::log(uniform_unit(rng)) / log_q);
      if (skip >= static_cast<double>(pairs - i)) break;
      i += static_cast<std::uint64_t>(skip);
      arcs.push_back(pair_arc(i));
      if (++i >= pairs) break;
    }
  } else {
    arcs.reserve(static_cast<std::size_t>(static_cast<double>(pairs) * cfg.p_arc * 1.05) + 16);
    for (std::uint64_t i = 0; i < pairs; ++i) {
      if (uniform_unit(rng) < cfg.p_arc) arcs.push_back(pair_arc(i));
    }
  }
  return build_digraph(cfg.n, arcs);
}

}  // namespace kdom

#endif  // KDOM_GENERATORS_HPP
