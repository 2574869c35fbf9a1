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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dilation {

enum class ErrorCode {
  InvalidInput,
  IndexOutOfRange,
  InvalidMatrix,
  ZeroDistanceBetweenDistinctPoints,
  AsymmetricMatrix,
  TriangleViolation,
  SelfLoop,
  DuplicateEdge,
  DisconnectedGraph,
  WeightMismatch,
  SameVertex,
  NotAnEndpoint,
  MissingPredecessors,
  EnumerationCapExceeded,
  SyntaxError,
  Io,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::ZeroDistanceBetweenDistinctPoints:
      return "ZeroDistanceBetweenDistinctPoints";
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::TriangleViolation: return "TriangleViolation";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::NotAnEndpoint: return "NotAnEndpoint";
    case ErrorCode::MissingPredecessors: return "MissingPredecessors";
    case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library. The code is stable and the
/// message names the offending indices; parse errors also carry the
/// 1-based line number of the instance file.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  /// `indices` names the offending vertices or matrix rows, in the order
  /// they appear in the message.
  Error(ErrorCode code, const std::string& detail, std::vector<std::size_t> indices)
      : Error(code, detail) {
    indices_ = std::move(indices);
  }

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

  /// Same error, reported against a 1-based input line.
  Error at_line(std::size_t line) const { return Error(*this, line); }

 private:
  Error(const Error& base, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " +
                           std::string(to_string(base.code_)) + ": " + base.detail_),
        code_(base.code_),
        detail_(base.detail_),
        line_(line),
        indices_(base.indices_) {}

  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> line_;
  std::vector<std::size_t> indices_;
};

}  // namespace dilation
