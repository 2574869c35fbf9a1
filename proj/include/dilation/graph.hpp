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
#include <compare>
#include <cstddef>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dilation/error.hpp"
#include "dilation/metric.hpp"

namespace dilation {

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

struct Components {
  bool connected = true;
  /// Each component sorted; components ordered by smallest member.
  std::vector<std::vector<Vertex>> parts;
};

/// Undirected graph over a metric space. Edge weights are never stored:
/// the weight of {u,v} is always space.distance(u,v).
class Graph {
 public:
  /// Validates endpoints, self-loops and duplicates, then connectivity.
  Graph(std::shared_ptr<const MetricSpace> space, std::span<const Edge> edges)
      : Graph(std::move(space), edges, /*require_connected=*/true) {}

  Graph(std::shared_ptr<const MetricSpace> space, std::span<const Edge> edges,
        bool require_connected)
      : space_(std::move(space)) {
    if (!space_) throw Error(ErrorCode::InvalidInput, "graph needs a metric space");
    const std::size_t n = space_->size();
    adjacency_.assign(n, {});
    edges_.reserve(edges.size());
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
      const Edge& e = edges[idx];
      if (e.u >= n || e.v >= n) {
        throw Error(ErrorCode::IndexOutOfRange, "edge #" + std::to_string(idx) + " " +
                                                    to_string(e) + " with n = " +
                                                    std::to_string(n));
      }
      if (e.u == e.v) {
        throw Error(ErrorCode::SelfLoop,
                    "edge #" + std::to_string(idx) + " " + to_string(e) + " is a self-loop");
      }
      edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + to_string(*dup) + " appears twice");
    }
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    if (require_connected) {
      Components c = components();
      if (!c.connected) {
        std::string listing;
        for (const auto& part : c.parts) {
          listing += listing.empty() ? "{" : " {";
          for (std::size_t i = 0; i < part.size(); ++i) {
            listing += (i ? "," : "") + std::to_string(part[i]);
          }
          listing += "}";
        }
        throw Error(ErrorCode::DisconnectedGraph,
                    std::to_string(c.parts.size()) + " components: " + listing);
      }
    }
  }

  const MetricSpace& space() const noexcept { return *space_; }
  const std::shared_ptr<const MetricSpace>& space_ptr() const noexcept { return space_; }
  std::size_t vertex_count() const noexcept { return space_->size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Sorted, canonical edge list.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted neighbour ids of v.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

  double weight(const Edge& e) const { return space_->distance(e.u, e.v); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= vertex_count() || b >= vertex_count()) return false;
    const auto& nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
  }

  /// G with extra edges; edges already present are skipped.
  Graph with_edges(std::span<const Edge> extra) const {
    std::vector<Edge> all = edges_;
    for (const Edge& e : extra) {
      if (e.u == e.v) {
        throw Error(ErrorCode::SelfLoop, "shortcut " + to_string(e) + " is a self-loop");
      }
      if (!has_edge(e.u, e.v)) all.push_back(e);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return Graph(space_, all, /*require_connected=*/false);
  }

  /// Unordered pairs u < v that are not edges, in lexicographic order.
  std::vector<Edge> non_edges() const {
    std::vector<Edge> out;
    const std::size_t n = vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      const auto& nbrs = adjacency_[u];
      auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u);
      for (Vertex v = u + 1; v < n; ++v) {
        if (it != nbrs.end() && *it == v) {
          ++it;
          continue;
        }
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  Components components() const {
    const std::size_t n = vertex_count();
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const Edge& e : edges_) {
      Vertex a = find(e.u), b = find(e.v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    Components c;
    std::vector<std::size_t> slot(n, n);
    for (Vertex v = 0; v < n; ++v) {
      const Vertex root = find(v);
      if (slot[root] == n) {
        slot[root] = c.parts.size();
        c.parts.emplace_back();
      }
      c.parts[slot[root]].push_back(v);
    }
    c.connected = c.parts.size() == 1;
    return c;
  }

  bool is_connected() const { return components().connected; }

 private:
  std::shared_ptr<const MetricSpace> space_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

}  // namespace dilation
