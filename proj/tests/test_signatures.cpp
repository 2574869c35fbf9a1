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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "dilation/signatures.hpp"
#include "oracles.hpp"

using namespace dilation;
using namespace dilation::testing;
using Catch::Matchers::WithinAbs;

namespace {

Signature sig(Vertex a, Vertex b) { return Signature{std::make_pair(a, b)}; }

}  // namespace

TEST_CASE("ShortcutSet bookkeeping", "[signatures]") {
  const auto space = unit_square_space();
  ShortcutSet f(*space, std::vector<Edge>{{3, 0}, {0, 2}});
  CHECK(f.size() == 2);
  CHECK(f.edges()[0] == Edge(0, 3));
  CHECK(f.endpoints() == std::vector<Vertex>{0, 2, 3});
  CHECK(f.weights()[0] == 1.0);
  CHECK(f.contains(3, 0));
  CHECK_FALSE(f.is_endpoint(1));
  CHECK_THROWS_AS(f.push_back(*space, Edge(2, 0)), Error);
  CHECK_THROWS_AS(ShortcutSet(*space, std::vector<Edge>{{1, 1}}), Error);
  CHECK_THROWS_AS(ShortcutSet(*space, std::vector<Edge>{{1, 7}}), Error);
}

TEST_CASE("Signature of a walk", "[signatures]") {
  const auto space = unit_square_space();
  const ShortcutSet f(*space, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(signature_of_path({1, 0}, f) == sig(1, 0));
  CHECK(signature_of_path({1, 2}, f).none());
  CHECK(signature_of_path({1, 0, 3, 2}, f) == sig(1, 2));
  CHECK(signature_of_path({0, 1, 2, 3}, f) == sig(0, 3));
}

TEST_CASE("Signatures on the augmented square", "[signatures]") {
  const Graph g = unit_square_path();
  const ShortcutSet ad(g.space(), std::vector<Edge>{{0, 3}});
  CHECK(signature(g, ad, 0, 3) == sig(0, 3));
  CHECK(signature(g, ad, 3, 0) == sig(0, 3));
  CHECK(signature(g, ad, 1, 3) == sig(0, 3));
  CHECK(signature(g, ad, 0, 1).none());
  CHECK(signature(g, ad, 1, 2).none());
  CHECK_THROWS_AS(signature(g, ad, 2, 2), Error);

  CHECK_THAT(restricted_benefit(g, ad, 0, 3), WithinAbs(2.0, 1e-12));
  CHECK(restricted_benefit(g, ad, 3, 0) == 0.0);
  try {
    (void)restricted_benefit(g, ad, 1, 3);
    FAIL("non-endpoint accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnEndpoint);
  }
}

TEST_CASE("Decomposition on the augmented square", "[signatures]") {
  const Graph g = unit_square_path();
  const Decomposition ad = benefit_decomposition(g, ShortcutSet(g.space(), std::vector<Edge>{{0, 3}}));
  REQUIRE(ad.classes.size() == 1);
  CHECK_THAT(ad.classes.at({0, 3}).benefit, WithinAbs(2.0, 1e-12));
  CHECK(ad.classes.at({0, 3}).pairs == 2);  // (0,3) and (1,3)
  CHECK(ad.none.benefit == 0.0);
  CHECK_THAT(ad.residual, WithinAbs(0.0, 1e-12));
  CHECK(ad.holds);

  const Decomposition ac = benefit_decomposition(g, ShortcutSet(g.space(), std::vector<Edge>{{0, 2}}));
  REQUIRE(ac.classes.size() == 1);
  CHECK(ac.classes.at({0, 2}).pairs == 2);  // (0,2) and (0,3)
  CHECK_THAT(ac.classes.at({0, 2}).benefit, WithinAbs(1.0, 1e-12));
  CHECK_THAT(ac.benefit_total, WithinAbs(brute_benefit(g, {{0, 2}}), 1e-12));
  CHECK(ac.holds);

  const Decomposition dup = benefit_decomposition(g, ShortcutSet(g.space(), std::vector<Edge>{{1, 2}}));
  CHECK(dup.benefit_total == 0.0);
  for (const auto& [key, cls] : dup.classes) CHECK(cls.benefit == 0.0);
  CHECK(dup.holds);

  CHECK_THROWS_AS(benefit_decomposition(g, ShortcutSet{}), Error);
}

TEST_CASE("Decomposition identity on random instances", "[signatures][prop]") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 10;
    const Graph g = random_graph(rng, n, rng() % n);
    std::vector<Edge> cand = g.non_edges();
    if (cand.empty()) continue;
    std::shuffle(cand.begin(), cand.end(), rng);
    cand.resize(std::min<std::size_t>(cand.size(), 1 + rng() % 3));
    const ShortcutSet f(g.space(), cand);

    const Decomposition d = benefit_decomposition(g, f);
    REQUIRE(d.holds);
    REQUIRE(d.none.benefit == 0.0);
    const double tol = static_cast<double>(n * n) * kEpsilon;
    REQUIRE_THAT(d.benefit_total, WithinAbs(brute_benefit(g, cand), tol));

    const std::size_t k = f.size();
    REQUIRE(d.classes.size() <= 2 * k * (2 * k - 1));
    for (const auto& [key, cls] : d.classes) {
      REQUIRE(key.first != key.second);
      REQUIRE(f.is_endpoint(key.first));
      REQUIRE(f.is_endpoint(key.second));
      REQUIRE_THAT(restricted_benefit(g, f, key.first, key.second),
                   WithinAbs(cls.benefit, tol));
    }

    // Every pair whose canonical path avoids F gains nothing, exactly.
    const SignatureAnalysis a(g, f);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (a.signature(u, v).none()) REQUIRE(a.pair_benefit(u, v) == 0.0);
      }
    }
  }
}

TEST_CASE("Signatures do not depend on edge order", "[signatures][prop]") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 4 + rng() % 8;
    const Graph g = random_graph(rng, n, n / 2);
    std::vector<Edge> cand = g.non_edges();
    if (cand.size() < 2) continue;
    std::shuffle(cand.begin(), cand.end(), rng);
    cand.resize(2);
    std::vector<Edge> shuffled = g.edges();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Graph h(g.space_ptr(), shuffled);
    const SignatureAnalysis a(g, ShortcutSet(g.space(), cand));
    const SignatureAnalysis b(h, ShortcutSet(g.space(), cand));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) REQUIRE(a.signature(u, v) == b.signature(u, v));
    }
  }
}
