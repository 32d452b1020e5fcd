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

#include "infgon/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "infgon/error.hpp"

namespace infgon {

IceQuiver::IceQuiver(std::vector<QuiverVertex> vertices, std::vector<int> b)
    : vertices_(std::move(vertices)), b_(std::move(b)) {
  const std::size_t n = vertices_.size();
  if (b_.size() != n * n) {
    throw Error(ErrorCode::InvalidDescriptor, "quiver matrix has the wrong size");
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (this->b(u, v) != -this->b(v, u)) {
        throw Error(ErrorCode::InvalidDescriptor, "quiver matrix is not skew-symmetric");
      }
      if (vertices_[u].frozen && vertices_[v].frozen && this->b(u, v) != 0) {
        throw Error(ErrorCode::InvalidDescriptor, "arrow between frozen vertices");
      }
    }
  }
  for (std::size_t u = 1; u < n; ++u) {
    if (!(vertices_[u - 1].label < vertices_[u].label)) {
      throw Error(ErrorCode::InvalidDescriptor, "quiver labels must be sorted and distinct");
    }
  }
}

std::optional<std::size_t> IceQuiver::index_of(const Edge& label) const {
  auto it = std::lower_bound(
      vertices_.begin(), vertices_.end(), label,
      [](const QuiverVertex& v, const Edge& e) { return v.label < e; });
  if (it == vertices_.end() || it->label != label) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

int IceQuiver::b(const Edge& u, const Edge& v) const {
  const auto iu = index_of(u);
  const auto iv = index_of(v);
  return iu && iv ? b(*iu, *iv) : 0;
}

std::vector<std::tuple<Edge, Edge, int>> IceQuiver::arrows() const {
  std::vector<std::tuple<Edge, Edge, int>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = 0; v < size(); ++v) {
      if (b(u, v) > 0) out.emplace_back(vertices_[u].label, vertices_[v].label, b(u, v));
    }
  }
  return out;
}

std::vector<std::array<Vertex, 3>> triangles_in_window(const TriangulationDesc& t,
                                                       Vertex a, Vertex b,
                                                       Vertex budget) {
  std::vector<std::array<Vertex, 3>> out;
  // Every triangle sits directly below its longest edge.
  for (const Edge& e : arcs_in_window(t, a, b, budget)) {
    const Vertex p = t.prev_right(e.left(), e.right()).value_or(e.left() + 1);
    out.push_back({e.left(), p, e.right()});
  }
  return out;
}

IceQuiver build_exchange_quiver(const TriangulationDesc& t, Vertex a, Vertex b,
                                Vertex budget) {
  std::vector<QuiverVertex> vertices;
  for (const Edge& e : edges_in_window(t, a, b, budget)) {
    vertices.push_back({e, t.is_frozen(e)});
  }
  const std::size_t n = vertices.size();
  std::vector<int> m(n * n, 0);
  IceQuiver shell(vertices, m);
  auto add_arrow = [&](const Edge& from, const Edge& to) {
    const std::size_t u = *shell.index_of(from);
    const std::size_t v = *shell.index_of(to);
    if (vertices[u].frozen && vertices[v].frozen) return;
    ++m[u * n + v];
    --m[v * n + u];
  };
  for (const auto& [x, y, z] : triangles_in_window(t, a, b, budget)) {
    const Edge xy(x, y), xz(x, z), yz(y, z);
    add_arrow(xy, xz);
    add_arrow(xz, yz);
    add_arrow(yz, xy);
  }
  return IceQuiver(std::move(vertices), std::move(m));
}

IceQuiver mutate(const IceQuiver& q, std::size_t k) {
  if (k >= q.size()) {
    throw Error(ErrorCode::OutsideWindow, "vertex index out of range");
  }
  if (q.vertices()[k].frozen) {
    throw Error(ErrorCode::FrozenVertex,
                "cannot mutate at frozen vertex " + to_string(q.vertices()[k].label),
                std::pair{q.vertices()[k].label.left(), q.vertices()[k].label.right()});
  }
  const std::size_t n = q.size();
  IceQuiver r = q;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      int& out = r.b_[i * n + j];
      if (i == k || j == k) {
        out = -q.b(i, j);
      } else if (q.vertices()[i].frozen && q.vertices()[j].frozen) {
        out = 0;
      } else {
        const int bik = q.b(i, k);
        const int bkj = q.b(k, j);
        const int sign = (bik > 0) - (bik < 0);
        out = q.b(i, j) + sign * std::max(bik * bkj, 0);
      }
    }
  }
  return r;
}

IceQuiver mutate(const IceQuiver& q, const Edge& label) {
  const auto k = q.index_of(label);
  if (!k) {
    throw Error(ErrorCode::OutsideWindow, to_string(label) + " is not a quiver vertex",
                std::pair{label.left(), label.right()});
  }
  return mutate(q, *k);
}

int b_entry(const TriangulationDesc& t, const Edge& mn, const Edge& ij) {
  if (!t.contains(ij)) {
    throw Error(ErrorCode::NotInTriangulation,
                to_string(ij) + " is not in the triangulation",
                std::pair{ij.left(), ij.right()});
  }
  if (t.is_frozen(ij)) {
    throw Error(ErrorCode::FrozenArc, "no B column for the frozen bridge " + to_string(ij),
                std::pair{ij.left(), ij.right()});
  }
  if (!t.has_edge(mn)) {
    throw Error(ErrorCode::NotInTriangulation,
                to_string(mn) + " is not in the triangulation",
                std::pair{mn.left(), mn.right()});
  }
  if (mn == ij) return 0;
  const Cover over_ij = minimal_arc_over(t, ij);
  std::optional<Cover> over_mn;
  try {
    over_mn = minimal_arc_over(t, mn);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoCover) throw;
  }
  if (over_ij.arc == mn) return over_ij.side == PassSide::Left ? 1 : -1;
  if (over_mn && over_mn->arc == ij) return over_mn->side == PassSide::Right ? 1 : -1;
  // Two edges under the same minimal cover: the left child points at the
  // right one.
  if (over_mn && over_mn->arc == over_ij.arc) {
    return over_ij.side == PassSide::Right ? 1 : -1;
  }
  return 0;
}

ComponentCount component_count(const TriangulationDesc& t) {
  const TriangulationClass c = classify(t);
  switch (c.kind) {
    case TriangulationClass::Kind::LocallyFinite: return {1, false};
    case TriangulationClass::Kind::FountainAt: return {2, false};
    case TriangulationClass::Kind::SplitFountainAt:
      return {3, c.second - c.first < 3};
  }
  return {};
}

namespace {

enum class Region { Left, Gap, Right, All };

Region region_of(const TriangulationClass& c, const Edge& e) {
  switch (c.kind) {
    case TriangulationClass::Kind::LocallyFinite: return Region::All;
    case TriangulationClass::Kind::FountainAt:
      return e.right() <= c.first ? Region::Left : Region::Right;
    case TriangulationClass::Kind::SplitFountainAt:
      if (e.right() <= c.first) return Region::Left;
      if (e.left() >= c.second) return Region::Right;
      return Region::Gap;
  }
  return Region::All;
}

}  // namespace

bool same_component(const TriangulationDesc& t, const Edge& e1, const Edge& e2) {
  for (const Edge* e : {&e1, &e2}) {
    if (!t.has_edge(*e)) {
      throw Error(ErrorCode::NotInTriangulation,
                  to_string(*e) + " is not in the triangulation",
                  std::pair{e->left(), e->right()});
    }
  }
  const TriangulationClass c = classify(t);
  const Region r1 = region_of(c, e1);
  if (r1 != region_of(c, e2)) return false;
  if (r1 != Region::Gap) return true;
  // Only the bridge passes over gap edges, and nothing passes over it.
  const auto bridge = t.bridge();
  return bridge && e1 != *bridge && e2 != *bridge;
}

std::vector<std::vector<std::size_t>> connected_components(const IceQuiver& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (q.b(u, v) != 0) parent[find(u)] = find(v);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t u = 0; u < n; ++u) groups[find(u)].push_back(u);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t mutable_component_count(const IceQuiver& q) {
  std::size_t count = 0;
  for (const auto& comp : connected_components(q)) {
    if (std::any_of(comp.begin(), comp.end(),
                    [&](std::size_t u) { return !q.vertices()[u].frozen; })) {
      ++count;
    }
  }
  return count;
}

std::vector<Edge> interior_complete(const TriangulationDesc& t, Vertex a, Vertex b,
                                    Vertex margin, Vertex budget) {
  const Vertex lo = a + margin;
  const Vertex hi = b - margin;
  std::vector<Edge> out;
  for (const Edge& e : edges_in_window(t, a, b, budget)) {
    if (e.left() < lo || e.right() > hi) continue;
    try {
      const Cover c = minimal_arc_over(t, e);
      if (c.arc.left() < lo || c.arc.right() > hi) continue;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NoCover) throw;
    }
    out.push_back(e);
  }
  return out;
}

bool rows_agree(const IceQuiver& p, const IceQuiver& q, const std::vector<Edge>& rows,
                const std::map<Edge, Edge>& relabel) {
  auto map = [&](const Edge& e) {
    const auto it = relabel.find(e);
    return it == relabel.end() ? e : it->second;
  };
  std::map<Edge, Edge> inverse;
  for (const auto& [from, to] : relabel) inverse.emplace(to, from);
  auto unmap = [&](const Edge& e) {
    const auto it = inverse.find(e);
    return it == inverse.end() ? e : it->second;
  };
  for (const Edge& u : rows) {
    if (!p.index_of(u) || !q.index_of(map(u))) return false;
    for (const QuiverVertex& v : p.vertices()) {
      if (p.b(u, v.label) != q.b(map(u), map(v.label))) return false;
    }
    for (const QuiverVertex& v : q.vertices()) {
      if (q.b(map(u), v.label) != p.b(u, unmap(v.label))) return false;
    }
  }
  return true;
}

std::string export_dot(const IceQuiver& q) {
  std::ostringstream os;
  os << "digraph {\n";
  for (const QuiverVertex& v : q.vertices()) {
    os << "  \"" << to_string(v.label) << "\"";
    if (v.frozen) os << " [shape=box]";
    os << ";\n";
  }
  for (const auto& [from, to, mult] : q.arrows()) {
    for (int k = 0; k < mult; ++k) {
      os << "  \"" << to_string(from) << "\" -> \"" << to_string(to) << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace infgon
