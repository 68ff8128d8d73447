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

// Batch runs over instances x k x heuristics, one CSV row each.
//
// A bench spec is a JSON object:
//
//   {
//     "instances": [ "graphs/a.txt",
//                    {"path": "graphs/b.txt", "id": "b"},
//                    {"er": {"n": 100, "p": 0.1, "seed": 7}, "id": "er100"} ],
//     "ks": [1, 2, 4, 8],
//     "heuristics": ["bg", "dcg", "tcg", "rand", "exact"],
//     "params": ["min", "avg"],      // rand only; one row per entry
//     "runs": 10,                    // rand only
//     "seed": 1,
//     "tie_break": "lowest_id",
//     "time_limit_s": 1800,          // exact only
//     "threads": 1                   // independent solves run concurrently
//   }
//
// Relative paths resolve against the spec file's directory.

#ifndef KDOM_BENCH_HPP
#define KDOM_BENCH_HPP

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "kdom/digraph.hpp"
#include "kdom/errors.hpp"
#include "kdom/generators.hpp"
#include "kdom/io.hpp"
#include "kdom/report.hpp"

namespace kdom {

struct BenchInstance {
  std::string id;
  std::variant<std::filesystem::path, ErConfig> source;
};

struct BenchSpec {
  std::vector<BenchInstance> instances;
  std::vector<std::uint32_t> ks{1};
  std::vector<Heuristic> heuristics;
  std::vector<ProbabilityParam> params{ProbabilityParam{}};
  std::uint32_t runs = 10;
  std::uint64_t seed = 1;
  TieBreak tie_break = TieBreak::lowest_id;
  double time_limit_s = 1800.0;
  unsigned threads = 1;
};

inline constexpr std::string_view kBenchCsvHeader = "instance,n,m,k,heuristic,params,size,time_s,status";

inline BenchSpec parse_bench_spec(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  BenchSpec spec;
  try {
    for (const auto& item : j.at("instances")) {
      BenchInstance inst;
      if (item.is_string()) {
        inst.source = base_dir / item.get<std::string>();
      } else if (item.contains("er")) {
        const auto& er = item.at("er");
        inst.source = ErConfig{er.at("n").get<std::size_t>(), er.at("p").get<double>(),
                               er.value("seed", std::uint64_t{0})};
      } else {
        inst.source = base_dir / item.at("path").get<std::string>();
      }
      if (item.is_object() && item.contains("id")) {
        inst.id = item.at("id").get<std::string>();
      } else if (const auto* path = std::get_if<std::filesystem::path>(&inst.source)) {
        inst.id = path->stem().string();
      } else {
        const auto& er = std::get<ErConfig>(inst.source);
        inst.id = "er_n" + std::to_string(er.n) + "_p" + detail::format_real(er.p_arc) + "_s" +
                  std::to_string(er.rng_seed);
      }
      spec.instances.push_back(std::move(inst));
    }
    if (j.contains("ks")) spec.ks = j.at("ks").get<std::vector<std::uint32_t>>();
    for (const auto& h : j.value("heuristics", std::vector<std::string>{})) {
      spec.heuristics.push_back(parse_heuristic(h));
    }
    if (j.contains("params")) {
      spec.params.clear();
      for (const auto& p : j.at("params").get<std::vector<std::string>>()) {
        spec.params.push_back(parse_probability_param(p));
      }
    }
    spec.runs = j.value("runs", spec.runs);
    spec.seed = j.value("seed", spec.seed);
    spec.tie_break = parse_tie_break(j.value("tie_break", std::string("lowest_id")));
    spec.time_limit_s = j.value("time_limit_s", spec.time_limit_s);
    spec.threads = j.value("threads", spec.threads);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad bench spec: ") + e.what());
  }
  for (const std::uint32_t k : spec.ks) check_multiplicity(k);
  if (spec.runs < 1) throw InputError("bench spec: runs must be at least 1");
  return spec;
}

inline BenchSpec load_bench_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return parse_bench_spec(j, path.parent_path());
}

inline Digraph load_instance(const BenchInstance& inst) {
  if (const auto* path = std::get_if<std::filesystem::path>(&inst.source)) return read_digraph(*path);
  return generate_er(std::get<ErConfig>(inst.source));
}

namespace detail {

inline std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (const char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

inline std::string format_seconds(double seconds) {
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof buffer, seconds, std::chars_format::fixed, 6);
  return std::string(buffer, ptr);
}

}  // namespace detail

inline std::string csv_row(const SolveReport& r, bool include_timing) {
  return detail::csv_field(r.instance) + "," + std::to_string(r.n) + "," + std::to_string(r.m) +
         "," + std::to_string(r.k) + "," + std::string(to_string(r.heuristic)) + "," +
         detail::csv_field(params_string(r)) + "," + std::to_string(r.set_size()) + "," +
         (include_timing ? detail::format_seconds(r.wall_time_s) : std::string()) + "," +
         std::string(r.status());
}

// Runs every (instance, k, heuristic[, param]) combination and writes the
// CSV once all rows are verified; a failed verification throws before any
// row is written. Rows are ordered by instance, k, heuristic list, param
// list regardless of the thread count.
inline std::vector<SolveReport> run_bench(const BenchSpec& spec, std::ostream& csv,
                                          bool include_timing) {
  struct Job {
    std::size_t instance;
    std::uint32_t k;
    Heuristic heuristic;
    ProbabilityParam param;
  };
  std::vector<Digraph> graphs;
  graphs.reserve(spec.instances.size());
  for (const auto& inst : spec.instances) graphs.push_back(load_instance(inst));

  std::vector<Job> jobs;
  for (std::size_t i = 0; i < spec.instances.size(); ++i) {
    for (const std::uint32_t k : spec.ks) {
      for (const Heuristic h : spec.heuristics) {
        if (h == Heuristic::rand) {
          for (const auto& p : spec.params) jobs.push_back({i, k, h, p});
        } else {
          jobs.push_back({i, k, h, {}});
        }
      }
    }
  }

  std::vector<SolveReport> reports(jobs.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      try {
        const Job& job = jobs[j];
        SolveOptions options{.k = job.k,
                             .seed = spec.seed,
                             .tie_break = spec.tie_break,
                             .param = job.param,
                             .runs = spec.runs,
                             .threads = 1,
                             .time_limit_s = spec.time_limit_s};
        reports[j] = solve(graphs[job.instance], job.heuristic, options, spec.instances[job.instance].id);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(jobs.size())));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  csv << kBenchCsvHeader << '\n';
  for (const auto& r : reports) csv << csv_row(r, include_timing) << '\n';
  return reports;
}

}  // namespace kdom

#endif  // KDOM_BENCH_HPP
