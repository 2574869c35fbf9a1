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

// Test-only reference implementations. None of these call into the
// shortest-path, benefit or search code they are used to check; they only
// read the metric table and the edge list.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <random>
#include <vector>

#include "dilation/graph.hpp"
#include "dilation/metric.hpp"

namespace dilation::testing {

using Matrix = std::vector<std::vector<double>>;

inline Matrix floyd_warshall(const MetricSpace& space, const std::vector<Edge>& edges) {
  const std::size_t n = space.size();
  const double inf = std::numeric_limits<double>::infinity();
  Matrix d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const Edge& e : edges) {
    const double w = space(e.u, e.v);
    d[e.u][e.v] = std::min(d[e.u][e.v], w);
    d[e.v][e.u] = std::min(d[e.v][e.u], w);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

inline Matrix floyd_warshall(const Graph& g) { return floyd_warshall(g.space(), g.edges()); }

/// Every simple path from s to t, by depth-first enumeration.
inline std::vector<std::vector<Vertex>> simple_paths(const Graph& g, Vertex s, Vertex t) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack{s};
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[s] = 1;
  auto dfs = [&](auto&& self, Vertex x) -> void {
    if (x == t) {
      out.push_back(stack);
      return;
    }
    for (Vertex y : g.neighbors(x)) {
      if (on_path[y]) continue;
      on_path[y] = 1;
      stack.push_back(y);
      self(self, y);
      stack.pop_back();
      on_path[y] = 0;
    }
  };
  dfs(dfs, s);
  return out;
}

inline double path_length(const MetricSpace& space, const std::vector<Vertex>& path) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) total += space(path[i], path[i + 1]);
  return total;
}

inline double dilation_sum(const MetricSpace& space, const Matrix& d) {
  double total = 0.0;
  for (std::size_t u = 0; u < space.size(); ++u) {
    for (std::size_t v = u + 1; v < space.size(); ++v) total += d[u][v] / space(u, v);
  }
  return total;
}

/// B(F) from two Floyd-Warshall runs.
inline double brute_benefit(const Graph& g, const std::vector<Edge>& shortcuts) {
  std::vector<Edge> all = g.edges();
  all.insert(all.end(), shortcuts.begin(), shortcuts.end());
  return dilation_sum(g.space(), floyd_warshall(g)) -
         dilation_sum(g.space(), floyd_warshall(g.space(), all));
}

inline std::vector<Edge> brute_non_edges(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      bool present = false;
      for (const Edge& e : g.edges()) present |= (e.u == u && e.v == v);
      if (!present) out.emplace_back(u, v);
    }
  }
  return out;
}

/// max B(F) over all k-subsets of non-edges, via bitmasks.
inline double brute_optimal_benefit(const Graph& g, std::size_t k) {
  const std::vector<Edge> cand = brute_non_edges(g);
  if (k >= cand.size()) return brute_benefit(g, cand);
  double best = -std::numeric_limits<double>::infinity();
  const std::uint64_t limit = std::uint64_t{1} << cand.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    std::vector<Edge> pick;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (mask >> i & 1) pick.push_back(cand[i]);
    }
    best = std::max(best, brute_benefit(g, pick));
  }
  return best;
}

/// Random connected graph on random points in the unit square: a random
/// spanning tree (each vertex attaches to an earlier one) plus `extra`
/// random edges.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t extra) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<MetricSpace::Point> pts(n);
  for (auto& p : pts) p = {coord(rng), coord(rng)};
  auto space = std::make_shared<const MetricSpace>(MetricSpace::from_points(pts));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  }
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (std::size_t tries = 0; tries < 20 * extra && extra > 0; ++tries) {
    Edge e(pick(rng), pick(rng));
    if (e.u == e.v || std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
    edges.push_back(e);
    if (--extra == 0) break;
  }
  return Graph(space, edges);
}

inline std::shared_ptr<const MetricSpace> unit_square_space() {
  return std::make_shared<const MetricSpace>(
      MetricSpace::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

/// A(0,0) - B(1,0) - C(1,1) - D(0,1) as a path.
inline Graph unit_square_path() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}};
  return Graph(unit_square_space(), edges);
}

inline Graph collinear_path3() {
  auto space = std::make_shared<const MetricSpace>(MetricSpace::from_points({{0}, {1}, {2}}));
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  return Graph(space, edges);
}

inline Graph complete_graph(std::shared_ptr<const MetricSpace> space) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < space->size(); ++u) {
    for (Vertex v = u + 1; v < space->size(); ++v) edges.emplace_back(u, v);
  }
  return Graph(std::move(space), edges);
}

}  // namespace dilation::testing
