// Copyright 2026 The dilation-augment Authors
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

// Plain-text instance files.
//
//   DILATION-INSTANCE 1
//   n <int>
//   metric euclidean <dim>     |  metric matrix
//   point <i> <c1> ... <cdim>  |  row <i> <v1> ... <vn>     (n lines)
//   edges <m>
//   edge <u> <v>                                            (m lines)
//
// Tokens are whitespace-separated, lines whose first non-blank character
// is '#' are comments, blank lines are ignored. Indices are 0-based.

#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "dilation/error.hpp"
#include "dilation/graph.hpp"
#include "dilation/metric.hpp"

namespace dilation {

struct Instance {
  std::shared_ptr<const MetricSpace> space;
  Graph graph;
};

/// Shortest decimal text that reads back to the same double.
inline std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    Line line{++number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] inline void syntax(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, what).at_line(line);
}

inline std::size_t parse_index(const Line& line, std::size_t token) {
  std::string_view s = line.tokens.at(token);
  std::size_t value = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    syntax(line.number, "expected a nonnegative integer, got '" + std::string(s) + "'");
  }
  return value;
}

inline double parse_real(const Line& line, std::size_t token) {
  std::string_view s = line.tokens.at(token);
  double value = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    syntax(line.number, "expected a number, got '" + std::string(s) + "'");
  }
  return value;
}

inline void expect(const Line& line, std::string_view keyword, std::size_t token_count) {
  if (line.tokens.front() != keyword) {
    syntax(line.number, "expected '" + std::string(keyword) + "', got '" +
                            std::string(line.tokens.front()) + "'");
  }
  if (line.tokens.size() != token_count) {
    syntax(line.number, "'" + std::string(keyword) + "' takes " +
                            std::to_string(token_count - 1) + " values, got " +
                            std::to_string(line.tokens.size() - 1));
  }
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  using namespace detail;
  const std::vector<Line> lines = tokenize(text);
  std::size_t cursor = 0;
  std::size_t last_line = 0;
  auto next = [&]() -> const Line& {
    if (cursor >= lines.size()) syntax(last_line + 1, "unexpected end of input");
    last_line = lines[cursor].number;
    return lines[cursor++];
  };

  const Line& header = next();
  if (header.tokens.front() != "DILATION-INSTANCE") {
    syntax(header.number, "missing DILATION-INSTANCE header");
  }
  if (header.tokens.size() != 2 || header.tokens[1] != "1") {
    syntax(header.number, "unsupported format version");
  }

  const Line& n_line = next();
  expect(n_line, "n", 2);
  const std::size_t n = parse_index(n_line, 1);
  if (n < 2) syntax(n_line.number, "n must be at least 2");

  const Line& metric_line = next();
  if (metric_line.tokens.front() != "metric" || metric_line.tokens.size() < 2) {
    syntax(metric_line.number, "expected 'metric euclidean <dim>' or 'metric matrix'");
  }
  const bool euclidean = metric_line.tokens[1] == "euclidean";
  if (euclidean) {
    expect(metric_line, "metric", 3);
  } else if (metric_line.tokens[1] == "matrix") {
    expect(metric_line, "metric", 2);
  } else {
    syntax(metric_line.number, "unknown metric '" + std::string(metric_line.tokens[1]) + "'");
  }
  const std::size_t dim = euclidean ? parse_index(metric_line, 2) : n;
  if (euclidean && dim == 0) syntax(metric_line.number, "dimension must be at least 1");

  std::vector<std::vector<double>> rows(n);
  std::vector<std::size_t> row_lines(n);
  const std::string_view row_keyword = euclidean ? "point" : "row";
  for (std::size_t i = 0; i < n; ++i) {
    const Line& line = next();
    expect(line, row_keyword, dim + 2);
    if (parse_index(line, 1) != i) {
      syntax(line.number, "expected " + std::string(row_keyword) + " " + std::to_string(i));
    }
    rows[i].reserve(dim);
    for (std::size_t c = 0; c < dim; ++c) rows[i].push_back(parse_real(line, c + 2));
    row_lines[i] = line.number;
  }

  std::shared_ptr<const MetricSpace> space;
  try {
    space = std::make_shared<const MetricSpace>(euclidean ? MetricSpace::from_points(rows)
                                                          : MetricSpace::from_matrix(rows));
  } catch (const Error& e) {
    std::size_t at = row_lines.back();
    if (!e.indices().empty()) {
      // A coincident pair is reported at the later point.
      const std::size_t row = e.code() == ErrorCode::ZeroDistanceBetweenDistinctPoints
                                  ? e.indices().back()
                                  : e.indices().front();
      at = row_lines.at(row);
    }
    throw e.at_line(at);
  }

  const Line& edges_line = next();
  expect(edges_line, "edges", 2);
  const std::size_t m = parse_index(edges_line, 1);
  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  for (std::size_t k = 0; k < m; ++k) {
    const Line& line = next();
    expect(line, "edge", 3);
    const std::size_t u = parse_index(line, 1);
    const std::size_t v = parse_index(line, 2);
    if (u >= n || v >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(u) + "," +
                                                  std::to_string(v) + ") with n = " +
                                                  std::to_string(n))
          .at_line(line.number);
    }
    if (u == v) {
      throw Error(ErrorCode::SelfLoop, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                           ") is a self-loop")
          .at_line(line.number);
    }
    if (!seen.emplace(u, v).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + to_string(Edge(u, v)) + " appears twice")
          .at_line(line.number);
    }
    edges.emplace_back(u, v);
  }
  if (cursor != lines.size()) syntax(lines[cursor].number, "trailing content");

  try {
    Graph graph(space, edges);
    return Instance{space, std::move(graph)};
  } catch (const Error& e) {
    throw e.at_line(edges_line.number);
  }
}

inline std::string emit_instance(const Instance& inst) {
  const MetricSpace& space = *inst.space;
  const std::size_t n = space.size();
  std::string out = "DILATION-INSTANCE 1\nn " + std::to_string(n) + "\n";
  if (space.backend() == MetricBackend::Euclidean) {
    out += "metric euclidean " + std::to_string(space.dimension()) + "\n";
    for (std::size_t i = 0; i < n; ++i) {
      out += "point " + std::to_string(i);
      for (double c : space.points()[i]) out += " " + format_number(c);
      out += "\n";
    }
  } else {
    out += "metric matrix\n";
    for (std::size_t i = 0; i < n; ++i) {
      out += "row " + std::to_string(i);
      for (std::size_t j = 0; j < n; ++j) out += " " + format_number(space(i, j));
      out += "\n";
    }
  }
  const auto& edges = inst.graph.edges();
  out += "edges " + std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges) {
    out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

inline Instance load_instance(const std::string& path) {
  return parse_instance(read_text_file(path));
}

}  // namespace dilation
