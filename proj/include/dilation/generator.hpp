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
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dilation/error.hpp"
#include "dilation/graph.hpp"
#include "dilation/instance.hpp"
#include "dilation/metric.hpp"

namespace dilation {

enum class GraphModel { UniformSquare, Path, RandomTree };

inline std::optional<GraphModel> parse_model(std::string_view name) {
  if (name == "uniform-square") return GraphModel::UniformSquare;
  if (name == "path") return GraphModel::Path;
  if (name == "random-tree") return GraphModel::RandomTree;
  return std::nullopt;
}

inline const char* to_string(GraphModel m) {
  switch (m) {
    case GraphModel::UniformSquare: return "uniform-square";
    case GraphModel::Path: return "path";
    case GraphModel::RandomTree: return "random-tree";
  }
  return "unknown";
}

/// Deterministic draws on top of std::mt19937_64, whose output sequence is
/// fixed by the standard. The std distributions are implementation-defined,
/// so the mappings to [0,1) and [0,bound) are done here.
class PortableRandom {
 public:
  explicit PortableRandom(std::uint64_t seed) : engine_(seed) {}

  /// 53 random mantissa bits, uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

// Uniform labelled tree: decode a uniform Prufer sequence.
inline std::vector<Edge> random_tree(std::size_t n, PortableRandom& rng) {
  if (n == 2) return {Edge(0, 1)};
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = rng.below(n);
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t c : code) ++degree[c];
  std::set<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t c : code) {
    const std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
  return edges;
}

}  // namespace detail

struct GeneratorOptions {
  GraphModel model = GraphModel::UniformSquare;
  std::size_t n = 10;
  std::uint64_t seed = 0;
  /// Path model only: put point i at coordinate i on a line.
  bool collinear = false;
};

/// Random instance, bit-identical for equal options on every platform.
///
/// Points are i.i.d. uniform in [0,1]^2 (x then y). uniform-square adds a
/// uniform random spanning tree and then ceil(n/2) distinct random
/// non-edges; random-tree is the spanning tree alone; path links i to i+1.
inline Instance generate_instance(const GeneratorOptions& opt) {
  if (opt.n < 2) throw Error(ErrorCode::InvalidInput, "generator needs n >= 2");
  if (opt.collinear && opt.model != GraphModel::Path) {
    throw Error(ErrorCode::InvalidInput, "collinear placement applies to the path model only");
  }
  PortableRandom rng(opt.seed);
  const std::size_t n = opt.n;

  std::vector<MetricSpace::Point> points(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (opt.collinear) {
      points[i] = {static_cast<double>(i)};
    } else {
      const double x = rng.unit();
      const double y = rng.unit();
      points[i] = {x, y};
    }
  }
  auto space = std::make_shared<const MetricSpace>(MetricSpace::from_points(std::move(points)));

  std::vector<Edge> edges;
  switch (opt.model) {
    case GraphModel::Path:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case GraphModel::RandomTree:
      edges = detail::random_tree(n, rng);
      break;
    case GraphModel::UniformSquare: {
      edges = detail::random_tree(n, rng);
      std::set<Edge> present(edges.begin(), edges.end());
      const std::size_t free_pairs = n * (n - 1) / 2 - edges.size();
      const std::size_t extra = std::min((n + 1) / 2, free_pairs);
      while (edges.size() < (n - 1) + extra) {
        const std::size_t u = rng.below(n);
        const std::size_t v = rng.below(n);
        if (u == v) continue;
        if (present.emplace(u, v).second) edges.emplace_back(u, v);
      }
      break;
    }
  }
  Graph graph(space, edges);
  return Instance{space, std::move(graph)};
}

}  // namespace dilation
