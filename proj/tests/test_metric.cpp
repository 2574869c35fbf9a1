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

#include <cmath>
#include <random>

#include "dilation/metric.hpp"

using dilation::Error;
using dilation::ErrorCode;
using dilation::MetricSpace;
using Catch::Matchers::WithinAbs;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected dilation::Error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("Euclidean points give Euclidean distances", "[metric]") {
  const auto s = MetricSpace::from_points({{0, 0}, {3, 4}});
  CHECK(s.distance(0, 1) == 5.0);
  CHECK(s.distance(1, 0) == 5.0);
  CHECK(s.distance(0, 0) == 0.0);

  const auto diag = MetricSpace::from_points({{0, 0}, {1, 1}});
  CHECK_THAT(diag.distance(0, 1), WithinAbs(1.4142135624, 1e-10));
  CHECK(diag.backend() == dilation::MetricBackend::Euclidean);
  CHECK(diag.dimension() == 2);
}

TEST_CASE("Matrix backend is a direct lookup", "[metric]") {
  const auto s = MetricSpace::from_matrix({{0, 7}, {7, 0}});
  CHECK(s.distance(0, 1) == 7.0);
  CHECK(s.distance(1, 1) == 0.0);
  CHECK(s.backend() == dilation::MetricBackend::Matrix);

  CHECK_NOTHROW(MetricSpace::from_matrix({{0, 1}, {1, 0}}));
}

TEST_CASE("Matrix validation names the offending indices", "[metric]") {
  try {
    MetricSpace::from_matrix({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
    FAIL("triangle violation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TriangleViolation);
    CHECK(e.indices() == std::vector<std::size_t>{0, 1, 2});
  }
  CHECK(code_of([] { MetricSpace::from_matrix({{0, 1}, {2, 0}}); }) ==
        ErrorCode::AsymmetricMatrix);
  CHECK(code_of([] { MetricSpace::from_matrix({{0, 0}, {0, 0}}); }) ==
        ErrorCode::ZeroDistanceBetweenDistinctPoints);
  CHECK(code_of([] { MetricSpace::from_matrix({{1, 1}, {1, 0}}); }) == ErrorCode::InvalidMatrix);
  CHECK(code_of([] { MetricSpace::from_matrix({{0, -1}, {-1, 0}}); }) ==
        ErrorCode::InvalidMatrix);
  CHECK(code_of([] { MetricSpace::from_matrix({{0, 1}, {1}}); }) == ErrorCode::InvalidMatrix);
  CHECK(code_of([] { MetricSpace::from_matrix({{0}}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("Point validation", "[metric]") {
  CHECK(code_of([] { MetricSpace::from_points({{0, 0}, {0, 0}}); }) ==
        ErrorCode::ZeroDistanceBetweenDistinctPoints);
  CHECK(code_of([] { MetricSpace::from_points({{0, 0}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { MetricSpace::from_points({{0, 0}, {1}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { MetricSpace::from_points({{}, {}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] {
          MetricSpace::from_points({{0, 0}, {std::nan(""), 1}});
        }) == ErrorCode::InvalidInput);
}

TEST_CASE("Out-of-range lookups throw", "[metric]") {
  const auto s = MetricSpace::from_points({{0}, {1}});
  CHECK(code_of([&] { (void)s.distance(0, 2); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("Random spaces satisfy the metric axioms", "[metric][prop]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 15;
    const std::size_t dim = 1 + rng() % 4;
    std::vector<MetricSpace::Point> pts(n, MetricSpace::Point(dim));
    for (auto& p : pts) {
      for (auto& c : p) c = coord(rng);
    }
    const auto s = MetricSpace::from_points(pts);
    // The matrix backend must accept whatever the point backend produced.
    std::vector<std::vector<double>> rows(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = s(i, j);
    }
    const auto m = MetricSpace::from_matrix(rows);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(s(i, i) == 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(s(i, j) == s(j, i));
        CHECK(m(i, j) == m(j, i));
        CHECK(s(i, j) == MetricSpace::euclidean(pts[i], pts[j]));
        for (std::size_t k = 0; k < n; ++k) {
          CHECK(s(i, k) <= s(i, j) + s(j, k) + dilation::kEpsilon);
        }
      }
    }
  }
}
