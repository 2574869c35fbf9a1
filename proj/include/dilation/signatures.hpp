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

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dilation/analysis.hpp"
#include "dilation/error.hpp"
#include "dilation/graph.hpp"
#include "dilation/shortcuts.hpp"
#include "dilation/shortest_paths.hpp"

namespace dilation {

/// Where a pair's canonical path enters and leaves the shortcut set: the
/// first endpoint of the first shortcut traversed and the last endpoint of
/// the last one. Empty when the path uses no shortcut.
struct Signature {
  std::optional<std::pair<Vertex, Vertex>> value;

  bool none() const noexcept { return !value.has_value(); }
  friend bool operator==(const Signature&, const Signature&) = default;
};

inline std::string to_string(const Signature& s) {
  if (s.none()) return "none";
  return "(" + std::to_string(s.value->first) + "," + std::to_string(s.value->second) + ")";
}

/// Signature of the walk `path` (as returned by canonical_shortest_path).
inline Signature signature_of_path(const std::vector<Vertex>& path,
                                   const ShortcutSet& shortcuts) {
  Signature sig;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!shortcuts.contains(path[i], path[i + 1])) continue;
    if (!sig.value) {
      sig.value = std::make_pair(path[i], path[i + 1]);
    } else {
      sig.value->second = path[i + 1];
    }
  }
  return sig;
}

/// Precomputed state for repeated signature queries on G ∪ F.
class SignatureAnalysis {
 public:
  SignatureAnalysis(const Graph& g, ShortcutSet shortcuts)
      : shortcuts_(std::move(shortcuts)),
        space_(g.space_ptr()),
        before_(apsp(g)),
        after_(apsp(g.with_edges(shortcuts_.edges()))) {}

  const ShortcutSet& shortcuts() const noexcept { return shortcuts_; }
  const DistanceOracle& before() const noexcept { return before_; }
  const DistanceOracle& after() const noexcept { return after_; }

  /// Pairs are traversed from the smaller id to the larger one.
  Signature signature(Vertex u, Vertex v) const {
    if (u == v) {
      throw Error(ErrorCode::SameVertex, "signature of (" + std::to_string(u) + "," +
                                             std::to_string(v) + ") is undefined");
    }
    if (u > v) std::swap(u, v);
    return signature_of_path(canonical_shortest_path(after_, u, v), shortcuts_);
  }

  double pair_benefit(Vertex u, Vertex v) const {
    const MetricSpace& space = *space_;
    return before_.distance(u, v) / space(u, v) - after_.distance(u, v) / space(u, v);
  }

  /// Sum of pair benefits over pairs whose signature is exactly (a,b).
  double restricted_benefit(Vertex a, Vertex b) const {
    for (Vertex x : {a, b}) {
      if (!shortcuts_.is_endpoint(x)) {
        throw Error(ErrorCode::NotAnEndpoint,
                    "vertex " + std::to_string(x) + " is not a shortcut endpoint");
      }
    }
    if (a == b) {
      throw Error(ErrorCode::SameVertex,
                  "restricted benefit needs distinct endpoints, got " + std::to_string(a));
    }
    const std::size_t n = space_->size();
    double total = 0.0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const Signature s = signature(u, v);
        if (s.value && s.value->first == a && s.value->second == b) {
          total += pair_benefit(u, v);
        }
      }
    }
    return total;
  }

 private:
  ShortcutSet shortcuts_;
  std::shared_ptr<const MetricSpace> space_;
  DistanceOracle before_;
  DistanceOracle after_;
};

inline Signature signature(const Graph& g, const ShortcutSet& shortcuts, Vertex u, Vertex v) {
  return SignatureAnalysis(g, shortcuts).signature(u, v);
}

inline double restricted_benefit(const Graph& g, const ShortcutSet& shortcuts, Vertex a,
                                 Vertex b) {
  return SignatureAnalysis(g, shortcuts).restricted_benefit(a, b);
}

struct SignatureClass {
  double benefit = 0.0;
  std::size_t pairs = 0;
};

/// Partition of B(F) by signature.
struct Decomposition {
  /// Ordered endpoint pair -> restricted benefit; only signatures that occur.
  std::map<std::pair<Vertex, Vertex>, SignatureClass> classes;
  SignatureClass none;
  double restricted_sum = 0.0;
  double benefit_total = 0.0;
  double residual = 0.0;
  /// |residual| within n^2 * kEpsilon and the empty class sums to exactly 0.
  bool holds = false;
};

inline Decomposition benefit_decomposition(const Graph& g, const ShortcutSet& shortcuts) {
  if (shortcuts.empty()) {
    throw Error(ErrorCode::InvalidInput, "decomposition needs a nonempty shortcut set");
  }
  const SignatureAnalysis analysis(g, shortcuts);
  const std::size_t n = g.vertex_count();
  const BenefitLedger ledger = benefit_between(analysis.before(), analysis.after(), g.space());

  Decomposition d;
  d.benefit_total = ledger.total;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double b = ledger.per_pair[pair_index(n, u, v)];
      const Signature s = analysis.signature(u, v);
      SignatureClass& cls = s.none() ? d.none : d.classes[*s.value];
      cls.benefit += b;
      ++cls.pairs;
    }
  }
  for (const auto& [key, cls] : d.classes) d.restricted_sum += cls.benefit;
  d.residual = d.restricted_sum - d.benefit_total;
  const double tol = static_cast<double>(n * n) * kEpsilon;
  d.holds = std::abs(d.residual) <= tol && d.none.benefit == 0.0;
  return d;
}

}  // namespace dilation
