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
#include <string>
#include <vector>

#include "dilation/error.hpp"
#include "dilation/graph.hpp"
#include "dilation/metric.hpp"
#include "dilation/shortcuts.hpp"
#include "dilation/shortest_paths.hpp"

namespace dilation {

/// Dilation statistics over all unordered pairs u < v.
struct DilationReport {
  std::size_t n = 0;
  /// Indexed by pair_index(n, u, v).
  std::vector<double> per_pair;
  double average = 0.0;
  double maximum = 0.0;
  std::size_t pair_count = 0;

  double at(Vertex u, Vertex v) const { return per_pair.at(pair_index(n, u, v)); }
};

/// Benefit of a shortcut set: B(F) is the unnormalised sum of per-pair
/// dilation decreases, so B(F) = C(n,2) * (avg before - avg after).
struct BenefitLedger {
  std::size_t n = 0;
  std::vector<double> per_pair;
  double total = 0.0;

  double at(Vertex u, Vertex v) const { return per_pair.at(pair_index(n, u, v)); }
};

inline double pair_dilation(const DistanceOracle& oracle, const MetricSpace& space, Vertex u,
                            Vertex v) {
  if (u == v) {
    throw Error(ErrorCode::SameVertex, "dilation of (" + std::to_string(u) + "," +
                                           std::to_string(v) + ") is undefined");
  }
  return oracle.distance(u, v) / space.distance(u, v);
}

inline DilationReport dilation_report(const DistanceOracle& oracle, const MetricSpace& space) {
  const std::size_t n = space.size();
  DilationReport r;
  r.n = n;
  r.pair_count = pair_count(n);
  r.per_pair.reserve(r.pair_count);
  double sum = 0.0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double s = oracle(u, v) / space(u, v);
      r.per_pair.push_back(s);
      sum += s;
      r.maximum = std::max(r.maximum, s);
    }
  }
  r.average = sum / static_cast<double>(r.pair_count);
  return r;
}

inline DilationReport average_dilation(const Graph& g) {
  return dilation_report(apsp(g), g.space());
}

/// Sum over u < v of (before(u,v) - after(u,v)) / d_X(u,v).
inline BenefitLedger benefit_between(const DistanceOracle& before, const DistanceOracle& after,
                                     const MetricSpace& space) {
  const std::size_t n = space.size();
  BenefitLedger ledger;
  ledger.n = n;
  ledger.per_pair.reserve(pair_count(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double b = before(u, v) / space(u, v) - after(u, v) / space(u, v);
      ledger.per_pair.push_back(b);
      ledger.total += b;
    }
  }
  return ledger;
}

/// Total only; no allocation.
inline double benefit_total(const DistanceOracle& before, const DistanceOracle& after,
                            const MetricSpace& space) {
  const std::size_t n = space.size();
  double total = 0.0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      total += before(u, v) / space(u, v) - after(u, v) / space(u, v);
    }
  }
  return total;
}

/// B(F) computed from scratch: APSP of G and of G with F inserted.
/// Shortcuts that duplicate edges of G are allowed and contribute 0.
inline BenefitLedger benefit(const Graph& g, const ShortcutSet& shortcuts) {
  const DistanceOracle before = apsp(g);
  if (shortcuts.empty()) return benefit_between(before, before, g.space());
  return benefit_between(before, apsp(g.with_edges(shortcuts.edges())), g.space());
}

}  // namespace dilation
