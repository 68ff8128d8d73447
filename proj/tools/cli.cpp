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

#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kdom/kdom.hpp"

namespace kdom::cli {
namespace {

namespace fs = std::filesystem;

std::string instance_id(const fs::path& path) { return path.stem().string(); }

void write_text(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw IoError("cannot open " + *path + " for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("write to " + *path + " failed");
}

// A solution file is either a JSON solve report or a plain id list.
VertexSet read_solution(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      auto set = nlohmann::json::parse(text).at("solution").get<VertexSet>();
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      return set;
    } catch (const nlohmann::json::exception& e) {
      throw InputError(path.string() + ": " + e.what());
    }
  }
  std::istringstream stream(text);
  return parse_vertex_set(stream, path.string());
}

std::string report_text(const SolveReport& report, bool timing) {
  return to_json(report, timing).dump(2) + "\n";
}

struct Options {
  // gen-er
  std::size_t n = 0;
  double p = 0.0;
  // shared
  std::uint64_t seed = 0;
  std::string in;
  std::string out;
  std::optional<std::string> out_json;
  std::uint32_t k = 1;
  bool timing = false;
  // build-reach
  double radius_m = 0.0;
  bool reverse = false;
  unsigned threads = 0;
  // solve
  std::string heuristic = "tcg";
  std::string param = "min";
  std::uint32_t runs = 10;
  std::string tie_break = "lowest_id";
  // exact
  double time_limit_s = 1800.0;
  // verify
  std::string set;
  bool minimal = false;
  // bench
  std::string spec;
  std::optional<std::string> out_csv;
};

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Small k-dominating sets in digraphs: greedy, randomized and exact solvers", "kdom"};
  app.require_subcommand(1);
  Options o;
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());

  auto* gen = app.add_subcommand("gen-er", "Generate an Erdős–Rényi random digraph");
  gen->add_option("--n", o.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--p", o.p, "Arc probability")->required()->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", o.seed, "RNG seed");
  gen->add_option("--out", o.out, "Output digraph file")->required();

  auto* reach = app.add_subcommand("build-reach", "Build a reachability digraph from a road network");
  reach->add_option("--in", o.in, "Weighted network file (u v metres)")->required();
  reach->add_option("--radius-m", o.radius_m, "Reachability radius in metres")->required();
  reach->add_flag("--reverse", o.reverse, "Reverse arcs (destination semantics)");
  reach->add_option("--threads", o.threads, "Worker threads (default: all cores)");
  reach->add_option("--out", o.out, "Output digraph file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Find a small minimal k-dominating set");
  solve_cmd->add_option("--in", o.in, "Digraph file")->required();
  solve_cmd->add_option("--k", o.k, "Domination multiplicity")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--heuristic", o.heuristic, "bg|dcg|tcg|rand")
      ->check(CLI::IsMember({"bg", "dcg", "tcg", "rand"}));
  solve_cmd->add_option("--param", o.param, "rand in-degree parameter: min|avg|med|max|x=<real>");
  solve_cmd->add_option("--runs", o.runs, "rand: number of runs, best is kept")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", o.seed, "RNG seed");
  solve_cmd->add_option("--tie-break", o.tie_break, "Residual ties in tcg/rand: lowest_id|random");
  solve_cmd->add_option("--threads", o.threads, "rand: threads across runs");
  solve_cmd->add_option("--out-json", o.out_json, "Write the report here instead of stdout");
  solve_cmd->add_flag("--timing", o.timing, "Record wall time in the report");

  auto* exact_cmd = app.add_subcommand("exact", "Exact minimum k-dominating set (small digraphs)");
  exact_cmd->add_option("--in", o.in, "Digraph file")->required();
  exact_cmd->add_option("--k", o.k, "Domination multiplicity")->check(CLI::PositiveNumber);
  exact_cmd->add_option("--time-limit-s", o.time_limit_s, "Search budget in seconds")
      ->check(CLI::PositiveNumber);
  exact_cmd->add_option("--out-json", o.out_json, "Write the report here instead of stdout");
  exact_cmd->add_flag("--timing", o.timing, "Record wall time in the report");

  auto* lp = app.add_subcommand("export-lp", "Write the 0/1 program in LP format");
  lp->add_option("--in", o.in, "Digraph file")->required();
  lp->add_option("--k", o.k, "Domination multiplicity")->check(CLI::PositiveNumber);
  lp->add_option("--out", o.out, "Output .lp file")->required();

  auto* verify = app.add_subcommand("verify", "Check that a vertex set is k-dominating");
  verify->add_option("--in", o.in, "Digraph file")->required();
  verify->add_option("--k", o.k, "Domination multiplicity")->check(CLI::PositiveNumber);
  verify->add_option("--set", o.set, "Vertex id list or JSON solve report")->required();
  verify->add_flag("--minimal", o.minimal, "Also require minimality");

  auto* bench = app.add_subcommand("bench", "Run a benchmark spec and write a CSV table");
  bench->add_option("--spec", o.spec, "Bench spec (JSON)")->required();
  bench->add_option("--out-csv", o.out_csv, "Write the CSV here instead of stdout");
  bench->add_flag("--timing", o.timing, "Fill the time_s column");

  auto* stats = app.add_subcommand("stats", "Print n, m and in-degree statistics");
  stats->add_option("--in", o.in, "Digraph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (gen->parsed()) {
      write_digraph(generate_er({o.n, o.p, o.seed}), fs::path(o.out));
    } else if (reach->parsed()) {
      const auto net = read_weighted(o.in);
      const ReachabilityParams params{o.radius_m, o.reverse, o.threads == 0 ? hardware : o.threads};
      write_digraph(build_reachability(net, params), fs::path(o.out));
    } else if (solve_cmd->parsed()) {
      const Digraph graph = read_digraph(o.in);
      SolveOptions options{.k = o.k,
                           .seed = o.seed,
                           .tie_break = parse_tie_break(o.tie_break),
                           .param = parse_probability_param(o.param),
                           .runs = o.runs,
                           .threads = std::max(1u, o.threads)};
      const SolveReport report = solve(graph, parse_heuristic(o.heuristic), options, instance_id(o.in));
      write_text(o.out_json, report_text(report, o.timing), out);
    } else if (exact_cmd->parsed()) {
      const Digraph graph = read_digraph(o.in);
      SolveOptions options;
      options.k = o.k;
      options.time_limit_s = o.time_limit_s;
      const SolveReport report = solve(graph, Heuristic::exact, options, instance_id(o.in));
      write_text(o.out_json, report_text(report, o.timing), out);
      if (report.timed_out) {
        err << "time limit reached; reporting the best set found (size " << report.set_size() << ")\n";
        return kTimeoutWithIncumbent;
      }
    } else if (lp->parsed()) {
      const LpSummary s = export_lp(read_digraph(o.in), o.k, o.out);
      out << "variables=" << s.variables << " constraints=" << s.constraints << '\n';
    } else if (verify->parsed()) {
      const Digraph graph = read_digraph(o.in);
      const VertexSet set = read_solution(o.set);
      if (!is_k_dominating(graph, o.k, set)) {
        out << "FAIL: set of size " << set.size() << " is not " << o.k << "-dominating\n";
        return kVerificationFailure;
      }
      const bool minimal = is_minimal_k_dominating(graph, o.k, set);
      if (o.minimal && !minimal) {
        out << "FAIL: set of size " << set.size() << " is " << o.k << "-dominating but not minimal\n";
        return kVerificationFailure;
      }
      out << "OK: set of size " << set.size() << " is " << o.k << "-dominating"
          << (minimal ? " and minimal" : " (not minimal)") << '\n';
    } else if (bench->parsed()) {
      const BenchSpec spec = load_bench_spec(o.spec);
      std::ostringstream csv;
      run_bench(spec, csv, o.timing);
      write_text(o.out_csv, csv.str(), out);
    } else if (stats->parsed()) {
      const Digraph graph = read_digraph(o.in);
      const DegreeStats s = in_degree_stats(graph);
      out << "n=" << graph.num_vertices() << '\n'
          << "m=" << graph.num_arcs() << '\n'
          << "min_in=" << s.min_in << '\n'
          << "avg_in=" << detail::format_real(s.avg_in) << '\n'
          << "med_in=" << detail::format_real(s.med_in) << '\n'
          << "max_in=" << s.max_in << '\n'
          << "zero_in=" << s.zero_in << '\n';
    }
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kSuccess;
}

}  // namespace kdom::cli
