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

// Plain-text instance formats.
//
// Digraph:   first non-comment line "n m", then m lines "u v" (0-based).
// Weighted:  same header, then m lines "u v w" with w >= 0 in metres.
// Vertex set: whitespace-separated vertex ids.
//
// '#' starts a comment that runs to the end of the line; blank lines are
// ignored everywhere.

#ifndef KDOM_IO_HPP
#define KDOM_IO_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "kdom/coverage.hpp"
#include "kdom/digraph.hpp"
#include "kdom/errors.hpp"
#include "kdom/reachability.hpp"

namespace kdom {

namespace detail {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(&in), source_(std::move(source)) {}

  // Next non-blank line split into tokens; false at end of input.
  bool next(std::vector<std::string_view>& tokens) {
    tokens.clear();
    while (std::getline(*in_, line_)) {
      ++line_number_;
      std::string_view view(line_);
      if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
      std::size_t pos = 0;
      while (pos < view.size()) {
        while (pos < view.size() && is_space(view[pos])) ++pos;
        std::size_t end = pos;
        while (end < view.size() && !is_space(view[end])) ++end;
        if (end > pos) tokens.push_back(view.substr(pos, end - pos));
        pos = end;
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(source_, line_number_, what);
  }

  template <typename T>
  T integer(std::string_view token, const char* what) const {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
  }

  double real(std::string_view token, const char* what) const {
    double value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
  }

  std::size_t line_number() const noexcept { return line_number_; }
  const std::string& source() const noexcept { return source_; }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

  std::istream* in_;
  std::string source_;
  std::string line_;
  std::size_t line_number_ = 0;
};

struct Header {
  std::size_t n = 0;
  std::size_t m = 0;
};

inline Header read_header(LineReader& reader, std::vector<std::string_view>& tokens) {
  if (!reader.next(tokens)) reader.fail("missing 'n m' header");
  if (tokens.size() != 2) reader.fail("header must be 'n m'");
  return {reader.integer<std::size_t>(tokens[0], "vertex count"),
          reader.integer<std::size_t>(tokens[1], "arc count")};
}

inline Vertex read_endpoint(const LineReader& reader, std::string_view token, std::size_t n) {
  const auto v = reader.integer<std::uint64_t>(token, "vertex id");
  if (v >= n) {
    reader.fail("vertex " + std::string(token) + " outside [0," + std::to_string(n) + ")");
  }
  return static_cast<Vertex>(v);
}

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return in;
}

inline std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

inline void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

// Shortest decimal form that reads back to the same double.
inline std::string format_real(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

}  // namespace detail

inline Digraph parse_digraph(std::istream& in, const std::string& source = "<input>") {
  detail::LineReader reader(in, source);
  std::vector<std::string_view> tokens;
  const auto [n, m] = detail::read_header(reader, tokens);
  std::vector<Arc> arcs;
  arcs.reserve(m);
  while (reader.next(tokens)) {
    if (tokens.size() != 2) reader.fail("arc line must be 'u v'");
    if (arcs.size() == m) reader.fail("more arcs than the header's m=" + std::to_string(m));
    const Arc a{detail::read_endpoint(reader, tokens[0], n), detail::read_endpoint(reader, tokens[1], n)};
    if (a.tail == a.head) reader.fail("self-loop on vertex " + std::to_string(a.tail));
    arcs.push_back(a);
  }
  if (arcs.size() != m) {
    throw InputError(source + ": header announces " + std::to_string(m) + " arcs, found " +
                     std::to_string(arcs.size()));
  }
  return build_digraph(n, arcs);
}

inline Digraph read_digraph(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return parse_digraph(in, path.string());
}

// Arcs sorted by (tail, head).
inline void write_digraph(const Digraph& graph, std::ostream& out) {
  out << graph.num_vertices() << ' ' << graph.num_arcs() << '\n';
  for (Vertex u = 0; u < graph.num_vertices(); ++u) {
    for (const Vertex v : graph.out_neighbors(u)) out << u << ' ' << v << '\n';
  }
}

inline void write_digraph(const Digraph& graph, const std::filesystem::path& path) {
  auto out = detail::open_output(path);
  write_digraph(graph, out);
  detail::finish_output(out, path);
}

inline WeightedRoadNetwork parse_weighted(std::istream& in, const std::string& source = "<input>") {
  detail::LineReader reader(in, source);
  std::vector<std::string_view> tokens;
  const auto [n, m] = detail::read_header(reader, tokens);
  std::vector<WeightedArc> arcs;
  arcs.reserve(m);
  while (reader.next(tokens)) {
    if (tokens.size() != 3) reader.fail("weighted arc line must be 'u v w'");
    if (arcs.size() == m) reader.fail("more arcs than the header's m=" + std::to_string(m));
    WeightedArc a{detail::read_endpoint(reader, tokens[0], n),
                  detail::read_endpoint(reader, tokens[1], n), reader.real(tokens[2], "length")};
    if (a.tail == a.head) reader.fail("self-loop on vertex " + std::to_string(a.tail));
    if (!(a.weight >= 0.0)) {
      reader.fail("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                  ") has negative length " + std::string(tokens[2]));
    }
    arcs.push_back(a);
  }
  if (arcs.size() != m) {
    throw InputError(source + ": header announces " + std::to_string(m) + " arcs, found " +
                     std::to_string(arcs.size()));
  }
  return build_road_network(n, arcs);
}

inline WeightedRoadNetwork read_weighted(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return parse_weighted(in, path.string());
}

inline void write_weighted(const WeightedRoadNetwork& net, std::ostream& out) {
  out << net.num_vertices() << ' ' << net.graph().num_arcs() << '\n';
  for (const WeightedArc& a : net.arcs()) {
    out << a.tail << ' ' << a.head << ' ' << detail::format_real(a.weight) << '\n';
  }
}

inline void write_weighted(const WeightedRoadNetwork& net, const std::filesystem::path& path) {
  auto out = detail::open_output(path);
  write_weighted(net, out);
  detail::finish_output(out, path);
}

// Reads whitespace-separated vertex ids; the result is sorted and unique.
inline VertexSet parse_vertex_set(std::istream& in, const std::string& source = "<input>") {
  detail::LineReader reader(in, source);
  std::vector<std::string_view> tokens;
  VertexSet set;
  while (reader.next(tokens)) {
    for (const auto token : tokens) set.push_back(reader.integer<Vertex>(token, "vertex id"));
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

inline void write_vertex_set(std::span<const Vertex> set, std::ostream& out) {
  for (const Vertex v : set) out << v << '\n';
}

}  // namespace kdom

#endif  // KDOM_IO_HPP
