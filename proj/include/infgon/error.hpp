// Copyright 2026 The infgon Authors
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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace infgon {

/// Library error codes. The service layer reports these names verbatim.
enum class ErrorCode {
  InvalidEdge,
  NotAdjacentCover,
  WindowTooLarge,
  NoCover,
  NotInTriangulation,
  FrozenArc,
  SideNotFlippable,
  NotAFountain,
  NotLocallyFinite,
  NotEquivalent,
  InvalidDescriptor,
  FrozenVertex,
  BadIndexOrder,
  NotQuasiCommuting,
  BudgetExceeded,
  RelationCheckFailed,
  CertificateFailed,
  OutsideWindow,
  Overflow,
  ParseError,
};

std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::pair<std::int64_t, std::int64_t>> arc = std::nullopt)
      : std::runtime_error(message), code_(code), arc_(arc) {}

  ErrorCode code() const { return code_; }
  /// The arc the error refers to, when there is one.
  const std::optional<std::pair<std::int64_t, std::int64_t>>& arc() const {
    return arc_;
  }

 private:
  ErrorCode code_;
  std::optional<std::pair<std::int64_t, std::int64_t>> arc_;
};

}  // namespace infgon
