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
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "infgon/triangulation.hpp"

namespace infgon {

struct QuiverVertex {
  Edge label;
  bool frozen = false;
  friend bool operator==(const QuiverVertex&, const QuiverVertex&) = default;
};

/// Finite ice quiver stored as its signed arrow matrix.
class IceQuiver {
 public:
  IceQuiver() = default;
  /// `b` is row-major, size n*n. Throws InvalidDescriptor unless b is
  /// skew-symmetric with zero frozen-frozen block.
  IceQuiver(std::vector<QuiverVertex> vertices, std::vector<int> b);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<QuiverVertex>& vertices() const { return vertices_; }
  int b(std::size_t u, std::size_t v) const { return b_[u * size() + v]; }
  std::optional<std::size_t> index_of(const Edge& label) const;
  /// b entry by label, 0 when either label is absent.
  int b(const Edge& u, const Edge& v) const;

  /// (from, to, multiplicity) for every positive entry, in vertex order.
  std::vector<std::tuple<Edge, Edge, int>> arrows() const;

  friend bool operator==(const IceQuiver&, const IceQuiver&) = default;

 private:
  friend IceQuiver mutate(const IceQuiver& q, std::size_t v);

  std::vector<QuiverVertex> vertices_;
  std::vector<int> b_;
};

/// Triangles (x,y,z), x<y<z, with all three edges realized inside [a,b].
std::vector<std::array<Vertex, 3>> triangles_in_window(
    const TriangulationDesc& t, Vertex a, Vertex b,
    Vertex budget = kDefaultWindowBudget);

IceQuiver build_exchange_quiver(const TriangulationDesc& t, Vertex a, Vertex b,
                                Vertex budget = kDefaultWindowBudget);

IceQuiver mutate(const IceQuiver& q, std::size_t v);
IceQuiver mutate(const IceQuiver& q, const Edge& label);

int b_entry(const TriangulationDesc& t, const Edge& mn, const Edge& ij);

struct ComponentCount {
  int count = 1;
  /// Split fountain whose gap holds no mutable arc.
  bool finite_component_empty = false;
};

ComponentCount component_count(const TriangulationDesc& t);
bool same_component(const TriangulationDesc& t, const Edge& e1, const Edge& e2);

/// Weakly connected components of the arrow graph, as sorted vertex index
/// lists. Vertices without arrows form singleton components.
std::vector<std::vector<std::size_t>> connected_components(const IceQuiver& q);
/// Components that contain at least one mutable vertex.
std::size_t mutable_component_count(const IceQuiver& q);

/// Labels of window edges whose every triangle lies inside [a+margin, b-margin],
/// so their quiver rows are the same as in the infinite quiver.
std::vector<Edge> interior_complete(const TriangulationDesc& t, Vertex a, Vertex b,
                                    Vertex margin = 2,
                                    Vertex budget = kDefaultWindowBudget);

/// Compares the full rows of the listed labels. `relabel` maps labels of `p`
/// to labels of `q` (identity when absent).
bool rows_agree(const IceQuiver& p, const IceQuiver& q, const std::vector<Edge>& rows,
                const std::map<Edge, Edge>& relabel = {});

std::string export_dot(const IceQuiver& q);

}  // namespace infgon
