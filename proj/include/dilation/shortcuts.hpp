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
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dilation/error.hpp"
#include "dilation/graph.hpp"
#include "dilation/metric.hpp"

namespace dilation {

/// Ordered set of augmentation edges. Order is insertion history; weights
/// come from the metric like any other edge.
class ShortcutSet {
 public:
  ShortcutSet() = default;

  ShortcutSet(const MetricSpace& space, std::span<const Edge> edges) {
    for (const Edge& e : edges) push_back(space, e);
  }

  void push_back(const MetricSpace& space, const Edge& e) {
    if (e.u >= space.size() || e.v >= space.size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "shortcut " + to_string(e) + " with n = " + std::to_string(space.size()));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::SelfLoop, "shortcut " + to_string(e) + " is a self-loop");
    }
    if (contains(e)) {
      throw Error(ErrorCode::DuplicateEdge, "shortcut " + to_string(e) + " listed twice");
    }
    edges_.push_back(e);
    weights_.push_back(space(e.u, e.v));
    for (Vertex x : {e.u, e.v}) {
      auto it = std::lower_bound(endpoints_.begin(), endpoints_.end(), x);
      if (it == endpoints_.end() || *it != x) endpoints_.insert(it, x);
    }
  }

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  /// Sorted endpoint set V_F.
  const std::vector<Vertex>& endpoints() const noexcept { return endpoints_; }

  bool contains(const Edge& e) const {
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
  }
  bool contains(Vertex a, Vertex b) const { return contains(Edge(a, b)); }
  bool is_endpoint(Vertex x) const {
    return std::binary_search(endpoints_.begin(), endpoints_.end(), x);
  }

 private:
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  std::vector<Vertex> endpoints_;
};

/// Index of unordered pair u < v in the row-major upper triangle.
inline std::size_t pair_index(std::size_t n, Vertex u, Vertex v) noexcept {
  if (u > v) std::swap(u, v);
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

inline std::size_t pair_count(std::size_t n) noexcept { return n * (n - 1) / 2; }

}  // namespace dilation
