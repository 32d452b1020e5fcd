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

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "infgon/arc.hpp"

namespace infgon {

/// Default bound on b - a for every window materialization.
inline constexpr Vertex kDefaultWindowBudget = 4096;

/// Largest accepted gap r - l of a split fountain base.
inline constexpr Vertex kMaxSplitGap = 1 << 16;

/// {(c-n, c+n)} and {(c-n, c+n+1)} for n >= 1.
struct Leapfrog {
  Vertex center = 0;
  friend bool operator==(const Leapfrog&, const Leapfrog&) = default;
};

/// {(v-n, v)} and {(v, v+n)} for n >= 2.
struct Fountain {
  Vertex vertex = 0;
  friend bool operator==(const Fountain&, const Fountain&) = default;
};

/// Left fountain at l, right fountain at r, and the fan from l in the gap.
/// The bridge (l,r) is an arc when r >= l+2.
struct SplitFountain {
  Vertex left = 0;
  Vertex right = 1;
  friend bool operator==(const SplitFountain&, const SplitFountain&) = default;
};

using BaseFamily = std::variant<Leapfrog, Fountain, SplitFountain>;

bool base_contains(const BaseFamily& base, const Edge& e);
std::string to_string(const BaseFamily& base);

/// Arcs incident to one vertex on one side: a finite ascending list plus an
/// optional unbounded ray. On the right side the ray is every w >= *ray, on
/// the left side every u <= *ray.
struct Neighbors {
  std::vector<Vertex> listed;
  std::optional<Vertex> ray;
};

Neighbors base_right_neighbors(const BaseFamily& base, Vertex v);
Neighbors base_left_neighbors(const BaseFamily& base, Vertex v);

using EdgeSet = std::set<Edge>;

/// An infinite triangulation given as a canonical base family plus a finite
/// edit set. Structural invariants (removed within the base, added disjoint
/// from it and made of arcs) are enforced here; crossing and maximality are
/// checked separately by validate_window / is_valid.
class TriangulationDesc {
 public:
  explicit TriangulationDesc(BaseFamily base, EdgeSet removed = {},
                             EdgeSet added = {});

  static TriangulationDesc leapfrog(Vertex center);
  static TriangulationDesc fountain(Vertex vertex);
  static TriangulationDesc split(Vertex left, Vertex right);

  const BaseFamily& base() const { return base_; }
  const EdgeSet& removed() const { return removed_; }
  const EdgeSet& added() const { return added_; }

  /// Membership in the realized arc set (sides are not arcs).
  bool contains(const Edge& e) const;
  /// Realized arc or side.
  bool has_edge(const Edge& e) const { return e.is_side() || contains(e); }

  /// The split-fountain bridge, when it is an arc.
  std::optional<Edge> bridge() const;
  bool is_frozen(const Edge& e) const;
  bool is_mutable(const Edge& e) const {
    return e.is_arc() && contains(e) && !is_frozen(e);
  }

  /// Largest w with (v,w) realized; kPlusInfinity at a right fountain, v when
  /// there is none.
  Vertex reach_right(Vertex v) const;
  /// Smallest u with (u,v) realized; kMinusInfinity at a left fountain, v when
  /// there is none.
  Vertex reach_left(Vertex v) const;

  /// Smallest w > after with (v,w) realized.
  std::optional<Vertex> next_right(Vertex v, Vertex after) const;
  /// Largest w < before with (v,w) realized.
  std::optional<Vertex> prev_right(Vertex v, Vertex before) const;
  /// Largest u < before with (u,v) realized.
  std::optional<Vertex> next_left(Vertex v, Vertex before) const;

  /// Realized w with (v,w) and w <= hi, ascending.
  std::vector<Vertex> right_neighbors_upto(Vertex v, Vertex hi) const;

  /// Edit-set hull [lo, hi] including the base parameters.
  std::pair<Vertex, Vertex> support() const;

  friend bool operator==(const TriangulationDesc& a,
                         const TriangulationDesc& b) {
    return a.base_ == b.base_ && a.removed_ == b.removed_ &&
           a.added_ == b.added_;
  }

 private:
  BaseFamily base_;
  EdgeSet removed_;
  EdgeSet added_;
  std::set<std::pair<Vertex, Vertex>> added_by_right_;  // (right, left)
};

struct TriangulationClass {
  enum class Kind { LocallyFinite, FountainAt, SplitFountainAt };
  Kind kind = Kind::LocallyFinite;
  Vertex first = 0;   // fountain vertex, or l
  Vertex second = 0;  // r for split fountains
  friend bool operator==(const TriangulationClass&,
                         const TriangulationClass&) = default;
};

std::string to_string(const TriangulationClass& c);

struct Cover {
  Edge arc;
  PassSide side;
};

/// Vertices v[0] < v[1] < v[2] < v[3]; the diagonal joins opposite corners.
struct Quadrilateral {
  std::array<Vertex, 4> v;
  Edge diagonal;

  Edge other_diagonal() const;
  std::array<Edge, 4> boundary() const;
};

struct FlipResult {
  TriangulationDesc desc;
  Edge new_arc;
  Quadrilateral quad;
};

enum class FountainSide { Left, Right };

/// Realized arcs inside [a,b], sorted.
std::vector<Edge> arcs_in_window(const TriangulationDesc& t, Vertex a, Vertex b,
                                 Vertex budget = kDefaultWindowBudget);
/// Realized arcs and all sides inside [a,b], sorted.
std::vector<Edge> edges_in_window(const TriangulationDesc& t, Vertex a, Vertex b,
                                  Vertex budget = kDefaultWindowBudget);

Cover minimal_arc_over(const TriangulationDesc& t, const Edge& e);
Quadrilateral quadrilateral_of(const TriangulationDesc& t, const Edge& e);
FlipResult flip(const TriangulationDesc& t, const Edge& e);
TriangulationDesc apply_flips(TriangulationDesc t, const std::vector<Edge>& arcs);
TriangulationClass classify(const TriangulationDesc& t);

std::vector<Edge> fountain_arc_sequence(const TriangulationDesc& t,
                                        std::size_t count, FountainSide side);
std::vector<Edge> minimal_arc_chain(const TriangulationDesc& t, const Edge& start,
                                    std::size_t count);

bool mutation_equivalent(const TriangulationDesc& t1, const TriangulationDesc& t2);
std::vector<Edge> find_flip_sequence(const TriangulationDesc& t1,
                                     const TriangulationDesc& t2);

bool validate_window(const TriangulationDesc& t, Vertex a, Vertex b,
                     Vertex budget = kDefaultWindowBudget);
/// Window check over the edit hull with a margin.
bool is_valid(const TriangulationDesc& t);

}  // namespace infgon
