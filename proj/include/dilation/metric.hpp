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
#include <string>
#include <utility>
#include <vector>

#include "dilation/error.hpp"

namespace dilation {

using Vertex = std::size_t;

/// Absolute tolerance for every floating-point comparison in the library.
/// Inputs are assumed to have magnitude between 1 and about 1e3.
inline constexpr double kEpsilon = 1e-9;

enum class MetricBackend { Euclidean, Matrix };

/// A finite metric space over the vertex ids 0..n-1.
///
/// Both backends precompute the full distance table at construction, so
/// distance() is a lookup. Immutable after construction.
class MetricSpace {
 public:
  using Point = std::vector<double>;

  /// Points in R^d. Rejects n < 2, ragged or empty coordinates,
  /// non-finite values and coincident points.
  static MetricSpace from_points(std::vector<Point> points) {
    if (points.size() < 2) {
      throw Error(ErrorCode::InvalidInput, "metric space needs at least 2 points, got " +
                                               std::to_string(points.size()));
    }
    const std::size_t dim = points.front().size();
    if (dim == 0) throw Error(ErrorCode::InvalidInput, "point dimension must be at least 1");
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].size() != dim) {
        throw Error(ErrorCode::InvalidInput,
                    "point " + std::to_string(i) + " has dimension " +
                        std::to_string(points[i].size()) + ", expected " + std::to_string(dim),
                    {i});
      }
      for (double c : points[i]) {
        if (!std::isfinite(c)) {
          throw Error(ErrorCode::InvalidInput,
                      "point " + std::to_string(i) + " has a non-finite coordinate", {i});
        }
      }
    }

    MetricSpace space;
    space.backend_ = MetricBackend::Euclidean;
    space.n_ = points.size();
    space.dimension_ = dim;
    space.table_.assign(space.n_ * space.n_, 0.0);
    for (std::size_t i = 0; i < space.n_; ++i) {
      for (std::size_t j = i + 1; j < space.n_; ++j) {
        const double d = euclidean(points[i], points[j]);
        if (d <= kEpsilon) {
          throw Error(ErrorCode::ZeroDistanceBetweenDistinctPoints,
                      "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide",
                      {i, j});
        }
        space.table_[i * space.n_ + j] = d;
        space.table_[j * space.n_ + i] = d;
      }
    }
    space.points_ = std::move(points);
    return space;
  }

  /// Explicit n x n matrix, validated against all metric axioms.
  static MetricSpace from_matrix(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    if (n < 2) {
      throw Error(ErrorCode::InvalidInput,
                  "metric space needs at least 2 points, got " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw Error(ErrorCode::InvalidMatrix, "row " + std::to_string(i) + " has " +
                                                  std::to_string(rows[i].size()) +
                                                  " entries, expected " + std::to_string(n),
                    {i});
      }
    }

    MetricSpace space;
    space.backend_ = MetricBackend::Matrix;
    space.n_ = n;
    space.table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double d = rows[i][j];
        const std::string where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        if (!std::isfinite(d) || d < 0.0) {
          throw Error(ErrorCode::InvalidMatrix, "entry " + where + " is negative or non-finite",
                      {i, j});
        }
        if (i == j && d != 0.0) {
          throw Error(ErrorCode::InvalidMatrix, "diagonal entry " + where + " is not zero", {i, j});
        }
        if (i != j && d <= kEpsilon) {
          throw Error(ErrorCode::ZeroDistanceBetweenDistinctPoints,
                      "entry " + where + " is zero for distinct points", {i, j});
        }
        space.table_[i * n + j] = d;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (std::abs(space.table_[i * n + j] - space.table_[j * n + i]) > kEpsilon) {
          throw Error(ErrorCode::AsymmetricMatrix,
                      "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                          std::to_string(j) + "," + std::to_string(i) + ") differ",
                      {i, j});
        }
        // Lookups must be bit-identical under argument swap.
        space.table_[j * n + i] = space.table_[i * n + j];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (space.table_[i * n + k] >
              space.table_[i * n + j] + space.table_[j * n + k] + kEpsilon) {
            throw Error(ErrorCode::TriangleViolation,
                        "d(" + std::to_string(i) + "," + std::to_string(k) + ") > d(" +
                            std::to_string(i) + "," + std::to_string(j) + ") + d(" +
                            std::to_string(j) + "," + std::to_string(k) + ") on triple (" +
                            std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ")",
                        {i, j, k});
          }
        }
      }
    }
    return space;
  }

  std::size_t size() const noexcept { return n_; }
  MetricBackend backend() const noexcept { return backend_; }
  /// Coordinate dimension; 0 for the matrix backend.
  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<Point>& points() const noexcept { return points_; }

  double distance(Vertex i, Vertex j) const {
    if (i >= n_ || j >= n_) {
      throw Error(ErrorCode::IndexOutOfRange, "pair (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") with n = " +
                                                  std::to_string(n_));
    }
    return table_[i * n_ + j];
  }

  /// Unchecked lookup for inner loops.
  double operator()(Vertex i, Vertex j) const noexcept { return table_[i * n_ + j]; }

  /// Row-major n x n distance table.
  const std::vector<double>& table() const noexcept { return table_; }

  /// Left-to-right sum of squared differences, then one square root.
  static double euclidean(const Point& a, const Point& b) noexcept {
    double sum = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) {
      const double diff = a[c] - b[c];
      sum += diff * diff;
    }
    return std::sqrt(sum);
  }

 private:
  MetricSpace() = default;

  MetricBackend backend_ = MetricBackend::Euclidean;
  std::size_t n_ = 0;
  std::size_t dimension_ = 0;
  std::vector<Point> points_;
  std::vector<double> table_;
};

}  // namespace dilation
