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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "dilation/error.hpp"
#include "dilation/graph.hpp"
#include "dilation/metric.hpp"

namespace dilation {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Dense all-pairs shortest-path distances, optionally with a canonical
/// predecessor table.
///
/// dist(u,v) is always taken from the search rooted at min(u,v), so the
/// matrix is exactly symmetric. pred(s,v) is the vertex preceding v on the
/// canonical path from s: shortest length first, then fewest hops, then the
/// smallest predecessor id. Oracles produced by augment_distances() carry
/// distances only.
class DistanceOracle {
 public:
  DistanceOracle() = default;
  DistanceOracle(std::size_t n, std::vector<double> dist, std::vector<Vertex> pred = {})
      : n_(n), dist_(std::move(dist)), pred_(std::move(pred)) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(Vertex u, Vertex v) const noexcept { return dist_[u * n_ + v]; }
  double distance(Vertex u, Vertex v) const {
    check(u, v);
    return dist_[u * n_ + v];
  }
  const double* row(Vertex u) const noexcept { return dist_.data() + u * n_; }
  const std::vector<double>& matrix() const noexcept { return dist_; }

  bool has_predecessors() const noexcept { return !pred_.empty(); }
  Vertex predecessor(Vertex source, Vertex v) const {
    check(source, v);
    if (!has_predecessors()) {
      throw Error(ErrorCode::MissingPredecessors,
                  "this oracle was built incrementally and has no predecessor table");
    }
    return pred_[source * n_ + v];
  }

 private:
  void check(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) {
      throw Error(ErrorCode::IndexOutOfRange, "pair (" + std::to_string(u) + "," +
                                                  std::to_string(v) + ") with n = " +
                                                  std::to_string(n_));
    }
  }

  std::size_t n_ = 0;
  std::vector<double> dist_;
  std::vector<Vertex> pred_;
};

namespace detail {

struct SearchRow {
  std::vector<double> dist;
  std::vector<std::size_t> hops;
  std::vector<Vertex> pred;
};

// Dijkstra with lexicographic (length, hops, predecessor id) labels.
// Lengths within kEpsilon count as equal. Each settled label satisfies
// dist[v] == dist[pred[v]] + w(pred[v], v) exactly.
inline void dijkstra_from(const Graph& g, Vertex source, SearchRow& out) {
  const std::size_t n = g.vertex_count();
  const MetricSpace& space = g.space();
  constexpr double inf = std::numeric_limits<double>::infinity();
  out.dist.assign(n, inf);
  out.hops.assign(n, std::numeric_limits<std::size_t>::max());
  out.pred.assign(n, kNoVertex);
  std::vector<char> settled(n, 0);

  using Label = std::tuple<double, std::size_t, Vertex>;
  std::priority_queue<Label, std::vector<Label>, std::greater<>> heap;
  out.dist[source] = 0.0;
  out.hops[source] = 0;
  heap.emplace(0.0, 0, source);

  while (!heap.empty()) {
    const auto [d, h, x] = heap.top();
    heap.pop();
    if (settled[x] || d != out.dist[x] || h != out.hops[x]) continue;
    settled[x] = 1;
    for (Vertex y : g.neighbors(x)) {
      if (settled[y]) continue;
      const double nd = d + space(x, y);
      const std::size_t nh = h + 1;
      bool take = false;
      if (nd < out.dist[y] - kEpsilon) {
        take = true;
      } else if (nd <= out.dist[y] + kEpsilon) {
        take = nh < out.hops[y] || (nh == out.hops[y] && x < out.pred[y]);
      }
      if (take) {
        out.dist[y] = nd;
        out.hops[y] = nh;
        out.pred[y] = x;
        heap.emplace(nd, nh, y);
      }
    }
  }
}

}  // namespace detail

/// All-pairs shortest paths by one Dijkstra per source.
inline DistanceOracle apsp(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<double> dist(n * n);
  std::vector<Vertex> pred(n * n);
  detail::SearchRow row;
  for (Vertex s = 0; s < n; ++s) {
    detail::dijkstra_from(g, s, row);
    for (Vertex v = 0; v < n; ++v) {
      pred[s * n + v] = row.pred[v];
      if (v >= s) {
        dist[s * n + v] = row.dist[v];
        dist[v * n + s] = row.dist[v];
      }
    }
  }
  return DistanceOracle(n, std::move(dist), std::move(pred));
}

/// Shortest-path distances after inserting edge {u,v} of weight w:
/// new(a,b) = min(old(a,b), old(a,u)+w+old(v,b), old(a,v)+w+old(u,b)).
/// Returns a fresh distance-only oracle; the input is untouched.
inline DistanceOracle augment_distances(const DistanceOracle& base, const MetricSpace& space,
                                        Vertex u, Vertex v, double w) {
  const std::size_t n = base.size();
  if (u >= n || v >= n) {
    throw Error(ErrorCode::IndexOutOfRange, "shortcut (" + std::to_string(u) + "," +
                                                std::to_string(v) + ") with n = " +
                                                std::to_string(n));
  }
  if (u == v) {
    throw Error(ErrorCode::SelfLoop, "shortcut (" + std::to_string(u) + "," +
                                         std::to_string(v) + ") is a self-loop");
  }
  if (std::abs(w - space.distance(u, v)) > kEpsilon) {
    throw Error(ErrorCode::WeightMismatch,
                "shortcut (" + std::to_string(u) + "," + std::to_string(v) + ") weight " +
                    std::to_string(w) + " differs from metric distance " +
                    std::to_string(space.distance(u, v)));
  }
  std::vector<double> out(n * n);
  const double* du = base.row(u);
  const double* dv = base.row(v);
  for (Vertex a = 0; a < n; ++a) {
    const double* da = base.row(a);
    const double via_u = da[u] + w;
    const double via_v = da[v] + w;
    out[a * n + a] = 0.0;
    for (Vertex b = a + 1; b < n; ++b) {
      const double d = std::min({da[b], via_u + dv[b], via_v + du[b]});
      out[a * n + b] = d;
      out[b * n + a] = d;
    }
  }
  return DistanceOracle(n, std::move(out));
}

inline DistanceOracle augment_distances(const DistanceOracle& base, const MetricSpace& space,
                                        const Edge& e) {
  return augment_distances(base, space, e.u, e.v, space.distance(e.u, e.v));
}

/// Canonical shortest path from u to v, both endpoints included.
inline std::vector<Vertex> canonical_shortest_path(const DistanceOracle& oracle, Vertex u,
                                                   Vertex v) {
  if (u == v) {
    throw Error(ErrorCode::SameVertex, "path endpoints coincide at " + std::to_string(u));
  }
  std::vector<Vertex> path{v};
  Vertex x = v;
  while (x != u) {
    x = oracle.predecessor(u, x);
    if (x == kNoVertex) {
      throw Error(ErrorCode::DisconnectedGraph,
                  std::to_string(v) + " is unreachable from " + std::to_string(u));
    }
    path.push_back(x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace dilation
