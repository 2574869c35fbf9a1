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
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dilation/analysis.hpp"
#include "dilation/error.hpp"
#include "dilation/graph.hpp"
#include "dilation/parallel.hpp"
#include "dilation/shortcuts.hpp"
#include "dilation/shortest_paths.hpp"

namespace dilation {

/// Scores shortcut candidates against a fixed current distance matrix.
///
/// gain(e) = sum over u < v of the dilation decrease caused by inserting e
/// into the current graph, i.e. B(F + e) - B(F). Equivalent to summing
/// augment_distances() against the current oracle, without materialising
/// the matrix.
class GainEvaluator {
 public:
  explicit GainEvaluator(const MetricSpace& space) : space_(space), n_(space.size()) {
    inverse_.resize(n_ * n_, 0.0);
    for (Vertex a = 0; a < n_; ++a) {
      for (Vertex b = 0; b < n_; ++b) {
        if (a != b) inverse_[a * n_ + b] = 1.0 / space(a, b);
      }
    }
  }

  double gain(const DistanceOracle& current, const Edge& e) const {
    const double w = space_(e.u, e.v);
    const double* du = current.row(e.u);
    const double* dv = current.row(e.v);
    double total = 0.0;
    for (Vertex a = 0; a + 1 < n_; ++a) {
      const double* da = current.row(a);
      const double via_u = da[e.u] + w;
      const double via_v = da[e.v] + w;
      const double* inv = inverse_.data() + a * n_;
      for (Vertex b = a + 1; b < n_; ++b) {
        const double shortcut = std::min(via_u + dv[b], via_v + du[b]);
        const double saved = da[b] - shortcut;
        if (saved > 0.0) total += saved * inv[b];
      }
    }
    return total;
  }

 private:
  const MetricSpace& space_;
  std::size_t n_;
  std::vector<double> inverse_;
};

/// First index whose score beats every earlier one by more than kEpsilon.
inline std::size_t argmax_first(const std::vector<double>& scores) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best] + kEpsilon) best = i;
  }
  return best;
}

struct GreedyOptions {
  std::size_t steps = 1;
  std::size_t threads = 1;
  /// Stop before committing a step whose gain is below kEpsilon.
  bool stop_when_flat = false;
};

struct GreedyStep {
  std::size_t index = 0;  // 1-based
  Edge edge;
  double gain = 0.0;
  /// B(F_i), recomputed from the maintained oracle.
  double benefit = 0.0;
  /// s_avg(G ∪ F_i).
  double average = 0.0;
  std::size_t candidates = 0;
  bool flat = false;
  double seconds = 0.0;
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  ShortcutSet shortcuts;
  double initial_average = 0.0;
  /// Ran out of non-edges before the requested step count.
  bool truncated = false;
  bool stopped_flat = false;

  /// B(F_i); i beyond the last step yields the final benefit.
  double benefit_after(std::size_t i) const {
    if (i == 0 || steps.empty()) return 0.0;
    return steps[std::min(i, steps.size()) - 1].benefit;
  }
};

/// Greedy augmentation: each step inserts the non-edge of G ∪ F_{i-1} that
/// maximises B(F_{i-1} + e), ties going to the smallest (u,v).
inline GreedyTrace greedy_augment(const Graph& g, const GreedyOptions& options) {
  if (options.steps == 0) throw Error(ErrorCode::InvalidInput, "greedy needs steps >= 1");
  using Clock = std::chrono::steady_clock;
  const MetricSpace& space = g.space();
  const GainEvaluator evaluator(space);
  const DistanceOracle base = apsp(g);
  DistanceOracle current = base;
  std::vector<Edge> candidates = g.non_edges();

  GreedyTrace trace;
  trace.initial_average = dilation_report(base, space).average;

  std::vector<double> gains;
  for (std::size_t step = 1; step <= options.steps; ++step) {
    if (candidates.empty()) {
      trace.truncated = true;
      break;
    }
    const auto started = Clock::now();
    gains.assign(candidates.size(), 0.0);
    parallel_for(candidates.size(), options.threads,
                 [&](std::size_t i) { gains[i] = evaluator.gain(current, candidates[i]); });
    const std::size_t pick = argmax_first(gains);
    const bool flat = gains[pick] < kEpsilon;
    if (flat && options.stop_when_flat) {
      trace.stopped_flat = true;
      break;
    }

    GreedyStep record;
    record.index = step;
    record.edge = candidates[pick];
    record.gain = gains[pick];
    record.candidates = candidates.size();
    record.flat = flat;
    current = augment_distances(current, space, record.edge);
    record.benefit = benefit_total(base, current, space);
    record.average = dilation_report(current, space).average;
    trace.shortcuts.push_back(space, record.edge);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
    record.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    trace.steps.push_back(record);
  }
  return trace;
}

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

/// C(m, k), saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = m - k + i;
    // result * num / i is exact at every step; guard the product.
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * num / i;
  }
  return result;
}

struct OptimalResult {
  ShortcutSet shortcuts;
  /// B(F*), recomputed from scratch for the chosen set.
  double benefit = 0.0;
  /// k exceeded the number of non-edges; every non-edge was returned.
  bool truncated = false;
  std::uint64_t subsets = 0;
};

namespace detail {

struct SubsetSearch {
  const MetricSpace& space;
  const GainEvaluator& evaluator;
  const DistanceOracle& base;
  const std::vector<Edge>& candidates;
  std::size_t k;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best;
  double best_benefit = -std::numeric_limits<double>::infinity();
  std::uint64_t evaluated = 0;

  void run(const DistanceOracle& prefix, double prefix_benefit, std::size_t start) {
    const std::size_t remaining = k - chosen.size();
    const std::size_t last = candidates.size() - remaining;
    if (remaining == 1) {
      for (std::size_t j = start; j <= last; ++j) {
        const double total = prefix_benefit + evaluator.gain(prefix, candidates[j]);
        ++evaluated;
        if (total > best_benefit + kEpsilon) {
          best_benefit = total;
          best = chosen;
          best.push_back(j);
        }
      }
      return;
    }
    for (std::size_t j = start; j <= last; ++j) {
      const DistanceOracle next = augment_distances(prefix, space, candidates[j]);
      chosen.push_back(j);
      run(next, benefit_total(base, next, space), j + 1);
      chosen.pop_back();
    }
  }
};

}  // namespace detail

/// Exhaustive search over all k-subsets of non-edges in lexicographic
/// order; the first maximum wins.
inline OptimalResult optimal_augment(const Graph& g, std::size_t k,
                                     std::uint64_t cap = kDefaultEnumerationCap) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "optimal augmentation needs k >= 1");
  const MetricSpace& space = g.space();
  const std::vector<Edge> candidates = g.non_edges();
  OptimalResult result;

  if (k >= candidates.size()) {
    result.truncated = k > candidates.size();
    result.shortcuts = ShortcutSet(space, candidates);
    result.subsets = 1;
    result.benefit = benefit(g, result.shortcuts).total;
    return result;
  }

  const std::uint64_t subsets = binomial(candidates.size(), k);
  if (subsets > cap) {
    throw Error(ErrorCode::EnumerationCapExceeded,
                std::to_string(subsets) + " subsets of " + std::to_string(candidates.size()) +
                    " candidates needed, cap is " + std::to_string(cap));
  }

  const GainEvaluator evaluator(space);
  const DistanceOracle base = apsp(g);
  detail::SubsetSearch search{space, evaluator, base, candidates, k, {}, {}};
  search.chosen.reserve(k);
  search.run(base, 0.0, 0);

  for (std::size_t idx : search.best) result.shortcuts.push_back(space, candidates[idx]);
  result.subsets = search.evaluated;
  result.benefit = benefit(g, result.shortcuts).total;
  return result;
}

struct BoundReport {
  std::size_t k = 0;
  std::size_t greedy_steps_requested = 0;
  GreedyTrace greedy;
  OptimalResult optimal;
  double greedy_benefit_at_k = 0.0;
  double greedy_benefit_at_4k2 = 0.0;
  double optimal_benefit = 0.0;
  /// Present only when B(F*) > kEpsilon.
  std::optional<double> ratio_k;
  std::optional<double> ratio_4k2;
  bool theorem_k_satisfied = false;
  bool theorem_4k2_satisfied = false;
  /// B(F*) is zero: both bounds hold vacuously.
  bool trivial = false;

  bool satisfied() const noexcept { return theorem_k_satisfied && theorem_4k2_satisfied; }
};

/// Runs greedy for 4k^2 steps and compares B(F_k), B(F_{4k^2}) with B(F*):
/// B(F_k) >= B(F*)/(8k) and B(F_{4k^2}) >= B(F*)/2, each with kEpsilon slack.
inline BoundReport check_theorem_bounds(const Graph& g, std::size_t k,
                                        std::uint64_t cap = kDefaultEnumerationCap,
                                        std::size_t threads = 1) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "bound check needs k >= 1");
  BoundReport r;
  r.k = k;
  r.optimal = optimal_augment(g, k, cap);
  r.greedy_steps_requested = 4 * k * k;
  r.greedy = greedy_augment(g, {.steps = r.greedy_steps_requested, .threads = threads});
  r.greedy_benefit_at_k = r.greedy.benefit_after(k);
  r.greedy_benefit_at_4k2 = r.greedy.benefit_after(r.greedy_steps_requested);
  r.optimal_benefit = r.optimal.benefit;

  const double kd = static_cast<double>(k);
  r.theorem_k_satisfied = r.greedy_benefit_at_k >= r.optimal_benefit / (8.0 * kd) - kEpsilon;
  r.theorem_4k2_satisfied = r.greedy_benefit_at_4k2 >= r.optimal_benefit / 2.0 - kEpsilon;
  r.trivial = r.optimal_benefit <= kEpsilon;
  if (!r.trivial) {
    r.ratio_k = r.greedy_benefit_at_k / r.optimal_benefit;
    r.ratio_4k2 = r.greedy_benefit_at_4k2 / r.optimal_benefit;
  }
  return r;
}

enum class LemmaBranch { HalfOfOptimal, ImprovingEdge, Violation };

inline const char* to_string(LemmaBranch b) {
  switch (b) {
    case LemmaBranch::HalfOfOptimal: return "half-of-optimal";
    case LemmaBranch::ImprovingEdge: return "improving-edge";
    case LemmaBranch::Violation: return "violation";
  }
  return "unknown";
}

struct LemmaVerdict {
  LemmaBranch branch = LemmaBranch::Violation;
  double current_benefit = 0.0;
  double optimal_benefit = 0.0;
  /// B(S) + B(F*)/(8k^2), the bar the witness must clear.
  double required = 0.0;
  std::optional<Edge> witness;
  double witness_benefit = 0.0;

  bool satisfied() const noexcept { return branch != LemmaBranch::Violation; }
};

/// Either B(S) >= B(F*)/2, or some single edge e gives
/// B(S + e) >= B(S) + B(F*)/(8k^2). Violation means a bug somewhere.
inline LemmaVerdict check_key_lemma(const Graph& g, const ShortcutSet& s, std::size_t k,
                                    double optimal_benefit) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "lemma check needs k >= 1");
  const MetricSpace& space = g.space();
  const DistanceOracle base = apsp(g);
  const Graph augmented = g.with_edges(s.edges());
  const DistanceOracle current = s.empty() ? base : apsp(augmented);

  LemmaVerdict v;
  v.optimal_benefit = optimal_benefit;
  v.current_benefit = benefit_total(base, current, space);
  const double kd = static_cast<double>(k);
  v.required = v.current_benefit + optimal_benefit / (8.0 * kd * kd);
  if (v.current_benefit >= optimal_benefit / 2.0 - kEpsilon) {
    v.branch = LemmaBranch::HalfOfOptimal;
    return v;
  }

  const std::vector<Edge> candidates = augmented.non_edges();
  if (candidates.empty()) return v;
  const GainEvaluator evaluator(space);
  std::vector<double> gains(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    gains[i] = evaluator.gain(current, candidates[i]);
  }
  const std::size_t pick = argmax_first(gains);
  v.witness = candidates[pick];
  v.witness_benefit = v.current_benefit + gains[pick];
  v.branch = v.witness_benefit >= v.required - kEpsilon ? LemmaBranch::ImprovingEdge
                                                        : LemmaBranch::Violation;
  return v;
}

inline LemmaVerdict check_key_lemma(const Graph& g, const ShortcutSet& s, std::size_t k,
                                    std::uint64_t cap = kDefaultEnumerationCap) {
  return check_key_lemma(g, s, k, optimal_augment(g, k, cap).benefit);
}

}  // namespace dilation
