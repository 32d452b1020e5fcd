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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace infgon {

using Vertex = std::int64_t;

/// Vertex indices are bounded so that every sum or difference of two of them
/// (and the sentinels below) stays far from int64 overflow.
inline constexpr Vertex kMaxVertex = Vertex{1} << 40;

/// Sentinels used for "unbounded" neighbour reach (fountains).
inline constexpr Vertex kPlusInfinity = Vertex{1} << 50;
inline constexpr Vertex kMinusInfinity = -(Vertex{1} << 50);

/// An edge (i,j), i<j, of the infinity-gon: a side when j = i+1, an arc
/// otherwise. Construction rejects unordered pairs instead of swapping them.
class Edge {
 public:
  Edge(Vertex left, Vertex right);

  Vertex left() const { return left_; }
  Vertex right() const { return right_; }
  Vertex span() const { return right_ - left_; }
  bool is_side() const { return right_ == left_ + 1; }
  bool is_arc() const { return right_ >= left_ + 2; }

  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  Vertex left_;
  Vertex right_;
};

enum class PassSide { Left, Right };

/// Strict interleaving of endpoints.
bool crosses(const Edge& a, const Edge& b);

/// a passes over b: a != b and a.left <= b.left < b.right <= a.right.
bool passes_over(const Edge& a, const Edge& b);

/// Right when the cover shares the left endpoint, Left when it shares the
/// right one. Throws NotAdjacentCover otherwise.
PassSide pass_side(const Edge& cover, const Edge& inner);

std::string to_string(const Edge& e);
std::string to_string(PassSide side);

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    const auto h1 = std::hash<Vertex>{}(e.left());
    const auto h2 = std::hash<Vertex>{}(e.right());
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

}  // namespace infgon
