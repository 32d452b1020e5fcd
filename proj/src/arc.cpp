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

#include "infgon/arc.hpp"

#include "infgon/error.hpp"

namespace infgon {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::NotAdjacentCover: return "NotAdjacentCover";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::NoCover: return "NoCover";
    case ErrorCode::NotInTriangulation: return "NotInTriangulation";
    case ErrorCode::FrozenArc: return "FrozenArc";
    case ErrorCode::SideNotFlippable: return "SideNotFlippable";
    case ErrorCode::NotAFountain: return "NotAFountain";
    case ErrorCode::NotLocallyFinite: return "NotLocallyFinite";
    case ErrorCode::NotEquivalent: return "NotEquivalent";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::FrozenVertex: return "FrozenVertex";
    case ErrorCode::BadIndexOrder: return "BadIndexOrder";
    case ErrorCode::NotQuasiCommuting: return "NotQuasiCommuting";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::RelationCheckFailed: return "RelationCheckFailed";
    case ErrorCode::CertificateFailed: return "CertificateFailed";
    case ErrorCode::OutsideWindow: return "OutsideWindow";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Edge::Edge(Vertex left, Vertex right) : left_(left), right_(right) {
  if (left >= right) {
    throw Error(ErrorCode::InvalidEdge,
                "edge (" + std::to_string(left) + "," + std::to_string(right) +
                    ") must satisfy left < right",
                std::pair{left, right});
  }
  if (left < -kMaxVertex || right > kMaxVertex) {
    throw Error(ErrorCode::InvalidEdge, "vertex index out of range",
                std::pair{left, right});
  }
}

bool crosses(const Edge& a, const Edge& b) {
  return (a.left() < b.left() && b.left() < a.right() && a.right() < b.right()) ||
         (b.left() < a.left() && a.left() < b.right() && b.right() < a.right());
}

bool passes_over(const Edge& a, const Edge& b) {
  return a != b && a.left() <= b.left() && b.right() <= a.right();
}

PassSide pass_side(const Edge& cover, const Edge& inner) {
  const bool same_left = cover.left() == inner.left();
  const bool same_right = cover.right() == inner.right();
  if (!passes_over(cover, inner) || same_left == same_right) {
    throw Error(ErrorCode::NotAdjacentCover,
                to_string(cover) + " is not an adjacent cover of " +
                    to_string(inner),
                std::pair{inner.left(), inner.right()});
  }
  return same_left ? PassSide::Right : PassSide::Left;
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.left()) + "," + std::to_string(e.right()) + ")";
}

std::string to_string(PassSide side) {
  return side == PassSide::Left ? "Left" : "Right";
}

}  // namespace infgon
