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

#ifndef KDOM_REPORT_HPP
#define KDOM_REPORT_HPP

#include <charconv>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

#include <nlohmann/json.hpp>

#include "kdom/coverage.hpp"
#include "kdom/digraph.hpp"
#include "kdom/errors.hpp"
#include "kdom/exact.hpp"
#include "kdom/greedy.hpp"
#include "kdom/io.hpp"
#include "kdom/randomized.hpp"

namespace kdom {

enum class Heuristic { bg, dcg, tcg, rand, exact };

inline std::string_view to_string(Heuristic h) {
  switch (h) {
    case Heuristic::bg: return "bg";
    case Heuristic::dcg: return "dcg";
    case Heuristic::tcg: return "tcg";
    case Heuristic::rand: return "rand";
    case Heuristic::exact: return "exact";
  }
  return "?";
}

inline Heuristic parse_heuristic(std::string_view name) {
  for (const Heuristic h : {Heuristic::bg, Heuristic::dcg, Heuristic::tcg, Heuristic::rand,
                            Heuristic::exact}) {
    if (name == to_string(h)) return h;
  }
  throw InputError("unknown heuristic '" + std::string(name) + "' (expected bg|dcg|tcg|rand|exact)");
}

inline std::string_view to_string(TieBreak t) {
  return t == TieBreak::lowest_id ? "lowest_id" : "random";
}

inline TieBreak parse_tie_break(std::string_view name) {
  if (name == "lowest_id" || name == "lowest") return TieBreak::lowest_id;
  if (name == "random") return TieBreak::random;
  throw InputError("unknown tie-break '" + std::string(name) + "' (expected lowest_id|random)");
}

// "min", "avg", "med", "max" or "x=<real>".
inline ProbabilityParam parse_probability_param(std::string_view text) {
  if (text == "min") return {DegreeParam::min_in, 0.0};
  if (text == "avg") return {DegreeParam::avg_in, 0.0};
  if (text == "med") return {DegreeParam::med_in, 0.0};
  if (text == "max") return {DegreeParam::max_in, 0.0};
  if (text.starts_with("x=")) {
    const auto value = text.substr(2);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
    if (ec == std::errc() && ptr == value.data() + value.size()) {
      return {DegreeParam::explicit_value, x};
    }
  }
  throw InputError("unknown probability parameter '" + std::string(text) +
                   "' (expected min|avg|med|max|x=<real>)");
}

inline std::string to_string(const ProbabilityParam& param) {
  switch (param.mode) {
    case DegreeParam::min_in: return "min";
    case DegreeParam::avg_in: return "avg";
    case DegreeParam::med_in: return "med";
    case DegreeParam::max_in: return "max";
    case DegreeParam::explicit_value: return "x=" + detail::format_real(param.explicit_x);
  }
  return "?";
}

struct SolveOptions {
  std::uint32_t k = 1;
  std::uint64_t seed = 0;
  TieBreak tie_break = TieBreak::lowest_id;
  // rand only.
  ProbabilityParam param;
  std::uint32_t runs = 10;
  unsigned threads = 1;
  // exact only.
  double time_limit_s = 1800.0;
};

struct SolveReport {
  Heuristic heuristic = Heuristic::tcg;
  std::uint32_t k = 1;
  std::string instance;
  std::size_t n = 0;
  std::size_t m = 0;
  SolveOptions options;
  // Filled for rand.
  std::optional<ResolvedProbability> probability;
  std::optional<std::size_t> best_run;
  VertexSet solution;
  double wall_time_s = 0.0;
  bool timed_out = false;

  std::size_t set_size() const noexcept { return solution.size(); }
  std::string_view status() const noexcept { return timed_out ? "timeout_best_known" : "ok"; }
};

// Checks the solution with the stateless predicates: k-domination always,
// minimality for every heuristic except the exact search.
inline void verify_report(const Digraph& graph, const SolveReport& report) {
  if (!is_k_dominating(graph, report.k, report.solution)) {
    throw VerificationError(std::string(to_string(report.heuristic)) + " solution on '" +
                            report.instance + "' is not " + std::to_string(report.k) + "-dominating");
  }
  if (report.heuristic != Heuristic::exact &&
      !is_minimal_k_dominating(graph, report.k, report.solution)) {
    throw VerificationError(std::string(to_string(report.heuristic)) + " solution on '" +
                            report.instance + "' is not minimal");
  }
}

// Runs one solver, timing only the solver call, and verifies the result.
inline SolveReport solve(const Digraph& graph, Heuristic heuristic, const SolveOptions& options,
                         std::string instance) {
  SolveReport report;
  report.heuristic = heuristic;
  report.k = options.k;
  report.instance = std::move(instance);
  report.n = graph.num_vertices();
  report.m = graph.num_arcs();
  report.options = options;

  const GreedyConfig greedy{.k = options.k, .rng_seed = options.seed, .tie_break = options.tie_break};
  const auto start = std::chrono::steady_clock::now();
  switch (heuristic) {
    case Heuristic::bg: report.solution = basic_greedy(graph, greedy); break;
    case Heuristic::dcg: report.solution = deficiency_coverage_greedy(graph, greedy); break;
    case Heuristic::tcg: report.solution = two_criteria_greedy(graph, greedy); break;
    case Heuristic::rand: {
      RandomizedConfig cfg{.k = options.k,
                           .param = options.param,
                           .runs = options.runs,
                           .rng_seed = options.seed,
                           .tie_break = options.tie_break,
                           .threads = options.threads};
      RandomizedResult r = randomized_solve(graph, cfg);
      report.solution = std::move(r.best);
      report.probability = r.probability;
      report.best_run = r.best_run;
      break;
    }
    case Heuristic::exact: {
      ExactResult r = exact_gamma_k(graph, options.k, std::chrono::duration<double>(options.time_limit_s));
      report.solution = std::move(r.witness);
      report.timed_out = r.status == ExactStatus::timeout_best_known;
      break;
    }
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  verify_report(graph, report);
  return report;
}

// bg always takes the lowest id and dcg always draws at random.
inline std::string effective_tie_break(const SolveReport& r) {
  if (r.heuristic == Heuristic::bg) return "lowest_id";
  if (r.heuristic == Heuristic::dcg) return "random";
  return std::string(to_string(r.options.tie_break));
}

// Compact "key=value;..." echo of the configuration, used in CSV rows.
inline std::string params_string(const SolveReport& r) {
  std::string s;
  switch (r.heuristic) {
    case Heuristic::bg: s = "tie=" + effective_tie_break(r); break;
    case Heuristic::dcg:
    case Heuristic::tcg:
      s = "tie=" + effective_tie_break(r);
      if (effective_tie_break(r) == "random") s += ";seed=" + std::to_string(r.options.seed);
      break;
    case Heuristic::rand:
      s = "param=" + to_string(r.options.param) + ";runs=" + std::to_string(r.options.runs) +
          ";seed=" + std::to_string(r.options.seed);
      if (r.probability) {
        s += ";x=" + detail::format_real(r.probability->x) + ";p=" + detail::format_real(r.probability->p);
      }
      break;
    case Heuristic::exact: s = "time_limit_s=" + detail::format_real(r.options.time_limit_s); break;
  }
  return s;
}

// JSON form of a report. With include_timing false, wall_time_s is null so
// repeated runs produce byte-identical output.
inline nlohmann::ordered_json to_json(const SolveReport& r, bool include_timing) {
  nlohmann::ordered_json params;
  params["seed"] = r.options.seed;
  params["tie_break"] = effective_tie_break(r);
  if (r.heuristic == Heuristic::rand) {
    params["runs"] = r.options.runs;
    params["param"] = to_string(r.options.param);
    if (r.probability) {
      params["raw_x"] = r.probability->raw_x;
      params["resolved_x"] = r.probability->x;
      params["p"] = r.probability->p;
    }
    if (r.best_run) params["best_run"] = *r.best_run;
  }
  if (r.heuristic == Heuristic::exact) params["time_limit_s"] = r.options.time_limit_s;

  nlohmann::ordered_json j;
  j["heuristic"] = std::string(to_string(r.heuristic));
  j["k"] = r.k;
  j["instance"] = r.instance;
  j["n"] = r.n;
  j["m"] = r.m;
  j["params"] = std::move(params);
  j["set_size"] = r.set_size();
  j["solution"] = r.solution;
  j["wall_time_s"] = include_timing ? nlohmann::ordered_json(r.wall_time_s) : nlohmann::ordered_json();
  j["status"] = std::string(r.status());
  return j;
}

}  // namespace kdom

#endif  // KDOM_REPORT_HPP
