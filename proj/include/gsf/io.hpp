// Copyright 2026 The gsf developers
//
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

#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsf/graph.hpp"

namespace gsf {

namespace detail {

// Strips a trailing '#' comment and surrounding whitespace.
inline std::string strip_line(const std::string& line) {
  std::string s = line;
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace detail

// Graph text format: first line `n`, then either `u v` edge pairs (1-based)
// or a dense n x n block of 0/1 entries. `#` starts a comment.
inline Graph read_graph(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string s = detail::strip_line(raw);
    if (!s.empty()) lines.push_back(s);
  }
  if (lines.empty()) throw std::runtime_error("read_graph: empty input");
  auto head = detail::tokens(lines[0]);
  if (head.size() != 1) throw std::runtime_error("read_graph: first line must be the order n");
  int n = std::stoi(head[0]);
  Graph g(n);

  bool dense = false;
  if (lines.size() >= std::size_t(n) + 1) {
    auto first = detail::tokens(lines[1]);
    if (int(first.size()) == n) {
      dense = true;
      for (const auto& t : first)
        if (t != "0" && t != "1") dense = false;
    }
  }

  if (dense) {
    if (lines.size() != std::size_t(n) + 1)
      throw std::runtime_error("read_graph: dense block must have exactly n rows");
    for (int i = 0; i < n; ++i) {
      auto row = detail::tokens(lines[i + 1]);
      if (int(row.size()) != n) throw std::runtime_error("read_graph: bad dense row width");
      for (int j = 0; j < n; ++j) {
        if (row[j] != "0" && row[j] != "1") throw std::runtime_error("read_graph: dense entries must be 0/1");
        if (row[j] == "1") {
          if (i == j) throw std::runtime_error("read_graph: nonzero diagonal");
          if (i < j) g.add_edge(i + 1, j + 1);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      auto row = detail::tokens(lines[i + 1]);
      for (int j = 0; j < n; ++j)
        if ((row[j] == "1") != g.has_edge(i + 1, j + 1) && i != j)
          throw std::runtime_error("read_graph: dense block is not symmetric");
    }
  } else {
    for (std::size_t k = 1; k < lines.size(); ++k) {
      auto t = detail::tokens(lines[k]);
      if (t.size() != 2) throw std::runtime_error("read_graph: expected `u v` edge line");
      int u = std::stoi(t[0]);
      int v = std::stoi(t[1]);
      if (u == v) throw std::runtime_error("read_graph: self-loop");
      g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph read_graph_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_graph_file: cannot open " + path);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline std::string write_graph_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

inline void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_graph_file: cannot open " + path);
  write_graph(out, g);
}

}  // namespace gsf
