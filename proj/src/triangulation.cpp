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

#include "infgon/triangulation.hpp"

#include <algorithm>
#include <map>

#include "infgon/error.hpp"

namespace infgon {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::pair<Vertex, Vertex> as_pair(const Edge& e) { return {e.left(), e.right()}; }

void check_window(Vertex a, Vertex b, Vertex budget) {
  if (a >= b) {
    throw Error(ErrorCode::WindowTooLarge,
                "window [" + std::to_string(a) + "," + std::to_string(b) +
                    "] is empty");
  }
  if (b - a > budget) {
    throw Error(ErrorCode::WindowTooLarge,
                "window width " + std::to_string(b - a) + " exceeds budget " +
                    std::to_string(budget));
  }
}

}  // namespace

bool base_contains(const BaseFamily& base, const Edge& e) {
  const Vertex a = e.left();
  const Vertex b = e.right();
  return std::visit(
      overloaded{
          [&](const Leapfrog& f) {
            const Vertex u = f.center - a;
            return u >= 1 && (b - f.center == u || b - f.center == u + 1);
          },
          [&](const Fountain& f) {
            return (b == f.vertex && f.vertex - a >= 2) ||
                   (a == f.vertex && b - f.vertex >= 2);
          },
          [&](const SplitFountain& f) {
            return (b == f.left && f.left - a >= 2) ||
                   (a == f.right && b - f.right >= 2) ||
                   (a == f.left && b >= f.left + 2 && b <= f.right);
          },
      },
      base);
}

std::string to_string(const BaseFamily& base) {
  return std::visit(
      overloaded{
          [](const Leapfrog& f) { return "Leapfrog(" + std::to_string(f.center) + ")"; },
          [](const Fountain& f) { return "Fountain(" + std::to_string(f.vertex) + ")"; },
          [](const SplitFountain& f) {
            return "SplitFountain(" + std::to_string(f.left) + "," +
                   std::to_string(f.right) + ")";
          },
      },
      base);
}

Neighbors base_right_neighbors(const BaseFamily& base, Vertex v) {
  Neighbors n;
  std::visit(overloaded{
                 [&](const Leapfrog& f) {
                   if (v < f.center) {
                     n.listed = {2 * f.center - v, 2 * f.center - v + 1};
                   }
                 },
                 [&](const Fountain& f) {
                   if (v == f.vertex) {
                     n.ray = v + 2;
                   } else if (f.vertex - v >= 2) {
                     n.listed = {f.vertex};
                   }
                 },
                 [&](const SplitFountain& f) {
                   if (v == f.left) {
                     for (Vertex w = f.left + 2; w <= f.right; ++w) n.listed.push_back(w);
                   } else if (v == f.right) {
                     n.ray = v + 2;
                   } else if (v < f.left && f.left - v >= 2) {
                     n.listed = {f.left};
                   }
                 },
             },
             base);
  return n;
}

Neighbors base_left_neighbors(const BaseFamily& base, Vertex v) {
  Neighbors n;
  std::visit(overloaded{
                 [&](const Leapfrog& f) {
                   if (v >= f.center + 2) {
                     n.listed = {2 * f.center - v, 2 * f.center - v + 1};
                   } else if (v == f.center + 1) {
                     n.listed = {2 * f.center - v};
                   }
                 },
                 [&](const Fountain& f) {
                   if (v == f.vertex) {
                     n.ray = v - 2;
                   } else if (v - f.vertex >= 2) {
                     n.listed = {f.vertex};
                   }
                 },
                 [&](const SplitFountain& f) {
                   if (v == f.left) {
                     n.ray = v - 2;
                   } else if (v > f.left && v <= f.right && v >= f.left + 2) {
                     n.listed = {f.left};
                   } else if (v > f.right && v - f.right >= 2) {
                     n.listed = {f.right};
                   }
                 },
             },
             base);
  return n;
}

// ---------------------------------------------------------------------------

TriangulationDesc::TriangulationDesc(BaseFamily base, EdgeSet removed, EdgeSet added)
    : base_(base), removed_(std::move(removed)), added_(std::move(added)) {
  if (const auto* s = std::get_if<SplitFountain>(&base_)) {
    if (s->left >= s->right) {
      throw Error(ErrorCode::InvalidDescriptor, "split fountain needs l < r");
    }
    if (s->right - s->left > kMaxSplitGap) {
      throw Error(ErrorCode::InvalidDescriptor, "split fountain gap too wide");
    }
  }
  for (const Edge& e : removed_) {
    if (!base_contains(base_, e)) {
      throw Error(ErrorCode::InvalidDescriptor,
                  "removed arc " + to_string(e) + " is not in the base", as_pair(e));
    }
  }
  for (const Edge& e : added_) {
    if (!e.is_arc()) {
      throw Error(ErrorCode::InvalidDescriptor,
                  "added edge " + to_string(e) + " is a side", as_pair(e));
    }
    if (base_contains(base_, e)) {
      throw Error(ErrorCode::InvalidDescriptor,
                  "added arc " + to_string(e) + " already belongs to the base",
                  as_pair(e));
    }
    added_by_right_.emplace(e.right(), e.left());
  }
}

TriangulationDesc TriangulationDesc::leapfrog(Vertex center) {
  return TriangulationDesc(Leapfrog{center});
}
TriangulationDesc TriangulationDesc::fountain(Vertex vertex) {
  return TriangulationDesc(Fountain{vertex});
}
TriangulationDesc TriangulationDesc::split(Vertex left, Vertex right) {
  return TriangulationDesc(SplitFountain{left, right});
}

bool TriangulationDesc::contains(const Edge& e) const {
  if (added_.contains(e)) return true;
  return base_contains(base_, e) && !removed_.contains(e);
}

std::optional<Edge> TriangulationDesc::bridge() const {
  if (const auto* s = std::get_if<SplitFountain>(&base_)) {
    if (s->right >= s->left + 2) return Edge(s->left, s->right);
  }
  return std::nullopt;
}

bool TriangulationDesc::is_frozen(const Edge& e) const {
  if (e.is_side()) return true;
  const auto b = bridge();
  return b && *b == e;
}

Vertex TriangulationDesc::reach_right(Vertex v) const {
  const Neighbors n = base_right_neighbors(base_, v);
  if (n.ray) return kPlusInfinity;
  Vertex best = v;
  for (Vertex w : n.listed) {
    if (!removed_.contains(Edge(v, w))) best = std::max(best, w);
  }
  for (auto it = added_.lower_bound(Edge(v, v + 1));
       it != added_.end() && it->left() == v; ++it) {
    best = std::max(best, it->right());
  }
  return best;
}

Vertex TriangulationDesc::reach_left(Vertex v) const {
  const Neighbors n = base_left_neighbors(base_, v);
  if (n.ray) return kMinusInfinity;
  Vertex best = v;
  for (Vertex u : n.listed) {
    if (!removed_.contains(Edge(u, v))) best = std::min(best, u);
  }
  auto it = added_by_right_.lower_bound({v, kMinusInfinity});
  if (it != added_by_right_.end() && it->first == v) best = std::min(best, it->second);
  return best;
}

std::optional<Vertex> TriangulationDesc::next_right(Vertex v, Vertex after) const {
  std::optional<Vertex> best;
  auto offer = [&](Vertex w) {
    if (!best || w < *best) best = w;
  };
  const Neighbors n = base_right_neighbors(base_, v);
  for (Vertex w : n.listed) {
    if (w > after && !removed_.contains(Edge(v, w))) {
      offer(w);
      break;
    }
  }
  if (n.ray) {
    Vertex w = std::max(*n.ray, after + 1);
    while (removed_.contains(Edge(v, w))) ++w;
    offer(w);
  }
  for (auto it = added_.upper_bound(Edge(v, std::max(after, v + 1)));
       it != added_.end() && it->left() == v; ++it) {
    if (it->right() > after) {
      offer(it->right());
      break;
    }
  }
  return best;
}

std::optional<Vertex> TriangulationDesc::prev_right(Vertex v, Vertex before) const {
  std::optional<Vertex> best;
  auto offer = [&](Vertex w) {
    if (!best || w > *best) best = w;
  };
  const Neighbors n = base_right_neighbors(base_, v);
  for (auto it = n.listed.rbegin(); it != n.listed.rend(); ++it) {
    if (*it < before && !removed_.contains(Edge(v, *it))) {
      offer(*it);
      break;
    }
  }
  if (n.ray && before - 1 >= *n.ray) {
    for (Vertex w = before - 1; w >= *n.ray; --w) {
      if (!removed_.contains(Edge(v, w))) {
        offer(w);
        break;
      }
    }
  }
  for (auto it = added_.lower_bound(Edge(v, v + 1));
       it != added_.end() && it->left() == v && it->right() < before; ++it) {
    offer(it->right());
  }
  return best;
}

std::optional<Vertex> TriangulationDesc::next_left(Vertex v, Vertex before) const {
  std::optional<Vertex> best;
  auto offer = [&](Vertex u) {
    if (!best || u > *best) best = u;
  };
  const Neighbors n = base_left_neighbors(base_, v);
  for (auto it = n.listed.rbegin(); it != n.listed.rend(); ++it) {
    if (*it < before && !removed_.contains(Edge(*it, v))) {
      offer(*it);
      break;
    }
  }
  if (n.ray) {
    Vertex u = std::min(*n.ray, before - 1);
    while (removed_.contains(Edge(u, v))) --u;
    offer(u);
  }
  for (auto it = added_by_right_.lower_bound({v, kMinusInfinity});
       it != added_by_right_.end() && it->first == v && it->second < before; ++it) {
    offer(it->second);
  }
  return best;
}

std::vector<Vertex> TriangulationDesc::right_neighbors_upto(Vertex v, Vertex hi) const {
  std::vector<Vertex> out;
  const Neighbors n = base_right_neighbors(base_, v);
  for (Vertex w : n.listed) {
    if (w <= hi && !removed_.contains(Edge(v, w))) out.push_back(w);
  }
  if (n.ray) {
    for (Vertex w = *n.ray; w <= hi; ++w) {
      if (!removed_.contains(Edge(v, w))) out.push_back(w);
    }
  }
  for (auto it = added_.lower_bound(Edge(v, v + 1));
       it != added_.end() && it->left() == v && it->right() <= hi; ++it) {
    out.push_back(it->right());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<Vertex, Vertex> TriangulationDesc::support() const {
  Vertex lo = 0;
  Vertex hi = 0;
  std::visit(overloaded{
                 [&](const Leapfrog& f) { lo = hi = f.center; },
                 [&](const Fountain& f) { lo = hi = f.vertex; },
                 [&](const SplitFountain& f) {
                   lo = f.left;
                   hi = f.right;
                 },
             },
             base_);
  for (const EdgeSet* s : {&removed_, &added_}) {
    for (const Edge& e : *s) {
      lo = std::min(lo, e.left());
      hi = std::max(hi, e.right());
    }
  }
  return {lo, hi};
}

std::string to_string(const TriangulationClass& c) {
  switch (c.kind) {
    case TriangulationClass::Kind::LocallyFinite: return "LocallyFinite";
    case TriangulationClass::Kind::FountainAt:
      return "FountainAt(" + std::to_string(c.first) + ")";
    case TriangulationClass::Kind::SplitFountainAt:
      return "SplitFountainAt(" + std::to_string(c.first) + "," +
             std::to_string(c.second) + ")";
  }
  return "?";
}

Edge Quadrilateral::other_diagonal() const {
  const Edge d02(v[0], v[2]);
  return diagonal == d02 ? Edge(v[1], v[3]) : d02;
}

std::array<Edge, 4> Quadrilateral::boundary() const {
  return {Edge(v[0], v[1]), Edge(v[1], v[2]), Edge(v[2], v[3]), Edge(v[0], v[3])};
}

// ---------------------------------------------------------------------------

std::vector<Edge> arcs_in_window(const TriangulationDesc& t, Vertex a, Vertex b,
                                 Vertex budget) {
  check_window(a, b, budget);
  std::vector<Edge> out;
  for (Vertex v = a; v <= b - 2; ++v) {
    for (Vertex w : t.right_neighbors_upto(v, b)) out.emplace_back(v, w);
  }
  return out;
}

std::vector<Edge> edges_in_window(const TriangulationDesc& t, Vertex a, Vertex b,
                                  Vertex budget) {
  std::vector<Edge> out = arcs_in_window(t, a, b, budget);
  for (Vertex v = a; v < b; ++v) out.emplace_back(v, v + 1);
  std::sort(out.begin(), out.end());
  return out;
}

Cover minimal_arc_over(const TriangulationDesc& t, const Edge& e) {
  if (!t.has_edge(e)) {
    throw Error(ErrorCode::NotInTriangulation,
                to_string(e) + " is not in the triangulation", as_pair(e));
  }
  const auto w = t.next_right(e.left(), e.right());
  const auto u = t.next_left(e.right(), e.left());
  if (w && u) {
    throw Error(ErrorCode::InvalidDescriptor,
                "crossing covers over " + to_string(e), as_pair(e));
  }
  if (w) return {Edge(e.left(), *w), PassSide::Right};
  if (u) return {Edge(*u, e.right()), PassSide::Left};
  throw Error(ErrorCode::NoCover, "no arc passes over " + to_string(e), as_pair(e));
}

Quadrilateral quadrilateral_of(const TriangulationDesc& t, const Edge& e) {
  if (e.is_side()) {
    throw Error(ErrorCode::SideNotFlippable, "side is not flippable", as_pair(e));
  }
  if (!t.contains(e)) {
    throw Error(ErrorCode::NotInTriangulation,
                to_string(e) + " is not in the triangulation", as_pair(e));
  }
  if (t.is_frozen(e)) {
    throw Error(ErrorCode::FrozenArc,
                to_string(e) + " is the frozen split-fountain bridge", as_pair(e));
  }
  const Vertex i = e.left();
  const Vertex j = e.right();
  const Vertex p = t.prev_right(i, j).value_or(i + 1);
  if (!t.has_edge(Edge(p, j))) {
    throw Error(ErrorCode::InvalidDescriptor,
                "no triangle below " + to_string(e), as_pair(e));
  }
  const Cover c = minimal_arc_over(t, e);
  if (c.side == PassSide::Right) {
    return {{i, p, j, c.arc.right()}, e};
  }
  return {{c.arc.left(), i, p, j}, e};
}

FlipResult flip(const TriangulationDesc& t, const Edge& e) {
  const Quadrilateral quad = quadrilateral_of(t, e);
  const Edge other = quad.other_diagonal();
  EdgeSet removed = t.removed();
  EdgeSet added = t.added();
  if (added.erase(e) == 0) removed.insert(e);
  if (removed.erase(other) == 0) added.insert(other);
  return {TriangulationDesc(t.base(), std::move(removed), std::move(added)), other,
          quad};
}

TriangulationDesc apply_flips(TriangulationDesc t, const std::vector<Edge>& arcs) {
  for (const Edge& e : arcs) t = flip(t, e).desc;
  return t;
}

TriangulationClass classify(const TriangulationDesc& t) {
  return std::visit(
      overloaded{
          [](const Leapfrog&) { return TriangulationClass{}; },
          [](const Fountain& f) {
            return TriangulationClass{TriangulationClass::Kind::FountainAt, f.vertex,
                                      f.vertex};
          },
          [](const SplitFountain& f) {
            return TriangulationClass{TriangulationClass::Kind::SplitFountainAt,
                                      f.left, f.right};
          },
      },
      t.base());
}

std::vector<Edge> fountain_arc_sequence(const TriangulationDesc& t, std::size_t count,
                                        FountainSide side) {
  const TriangulationClass c = classify(t);
  if (c.kind == TriangulationClass::Kind::LocallyFinite) {
    throw Error(ErrorCode::NotAFountain, "triangulation has no fountain");
  }
  std::vector<Edge> out;
  if (side == FountainSide::Right) {
    const Vertex r = c.second;
    Vertex last = r;
    while (out.size() < count) {
      last = *t.next_right(r, last);
      out.emplace_back(r, last);
    }
  } else {
    const Vertex l = c.first;
    Vertex last = l;
    while (out.size() < count) {
      last = *t.next_left(l, last);
      out.emplace_back(last, l);
    }
  }
  return out;
}

std::vector<Edge> minimal_arc_chain(const TriangulationDesc& t, const Edge& start,
                                    std::size_t count) {
  if (classify(t).kind != TriangulationClass::Kind::LocallyFinite) {
    throw Error(ErrorCode::NotLocallyFinite,
                "minimal arc chains stall at a fountain");
  }
  if (!t.has_edge(start)) {
    throw Error(ErrorCode::NotInTriangulation,
                to_string(start) + " is not in the triangulation", as_pair(start));
  }
  std::vector<Edge> out;
  if (count == 0) return out;
  out.push_back(start);
  while (out.size() < count) out.push_back(minimal_arc_over(t, out.back()).arc);
  return out;
}

bool mutation_equivalent(const TriangulationDesc& t1, const TriangulationDesc& t2) {
  return t1.base() == t2.base();
}

namespace {

// Flips inside the polygon bounded by the realized arc `outer` until every
// interior diagonal is incident to outer.left(). Returns (flipped, created).
std::pair<std::vector<Edge>, std::vector<Edge>> normalize_to_fan(
    TriangulationDesc& t, const Edge& outer) {
  const Vertex a = outer.left();
  const Vertex b = outer.right();
  std::vector<Edge> flipped;
  std::vector<Edge> created;
  for (;;) {
    std::vector<Vertex> fan{a + 1};
    for (Vertex w : t.right_neighbors_upto(a, b)) fan.push_back(w);
    std::optional<Edge> gap;
    for (std::size_t k = 0; k + 1 < fan.size(); ++k) {
      if (fan[k + 1] > fan[k] + 1) {
        gap = Edge(fan[k], fan[k + 1]);
        break;
      }
    }
    if (!gap) break;
    FlipResult r = flip(t, *gap);
    flipped.push_back(*gap);
    created.push_back(r.new_arc);
    t = std::move(r.desc);
  }
  return {flipped, created};
}

}  // namespace

std::vector<Edge> find_flip_sequence(const TriangulationDesc& t1,
                                     const TriangulationDesc& t2) {
  if (!mutation_equivalent(t1, t2)) {
    throw Error(ErrorCode::NotEquivalent,
                "descriptors have different base families; no finite flip "
                "sequence exists");
  }
  EdgeSet candidates;
  for (const TriangulationDesc* t : {&t1, &t2}) {
    candidates.insert(t->removed().begin(), t->removed().end());
    candidates.insert(t->added().begin(), t->added().end());
  }
  // Smallest arc common to both descriptors above each differing arc.
  std::set<Edge> polygons;
  for (const Edge& d : candidates) {
    if (t1.contains(d) == t2.contains(d)) continue;
    const TriangulationDesc& owner = t1.contains(d) ? t1 : t2;
    Edge c = d;
    for (std::size_t steps = 0;; ++steps) {
      if (steps > 1u << 20) {
        throw Error(ErrorCode::BudgetExceeded, "common cover search did not end");
      }
      c = minimal_arc_over(owner, c).arc;
      if (t1.contains(c) && t2.contains(c)) break;
    }
    polygons.insert(c);
  }
  std::vector<Edge> outer;
  for (const Edge& p : polygons) {
    const bool nested = std::any_of(polygons.begin(), polygons.end(),
                                    [&](const Edge& q) { return passes_over(q, p); });
    if (!nested) outer.push_back(p);
  }

  std::vector<Edge> sequence;
  TriangulationDesc a = t1;
  TriangulationDesc b = t2;
  for (const Edge& p : outer) {
    auto [down, unused] = normalize_to_fan(a, p);
    auto [unused2, up] = normalize_to_fan(b, p);
    sequence.insert(sequence.end(), down.begin(), down.end());
    sequence.insert(sequence.end(), up.rbegin(), up.rend());
  }
  if (!(apply_flips(t1, sequence) == t2)) {
    throw Error(ErrorCode::InvalidDescriptor,
                "flip sequence does not reach the target; invalid descriptor?");
  }
  return sequence;
}

bool validate_window(const TriangulationDesc& t, Vertex a, Vertex b, Vertex budget) {
  check_window(a, b, budget);
  const auto n = static_cast<std::size_t>(b - a + 1);
  std::vector<Vertex> reach_r(n);
  std::vector<Vertex> reach_l(n);
  for (Vertex v = a; v <= b; ++v) {
    reach_r[static_cast<std::size_t>(v - a)] = t.reach_right(v);
    reach_l[static_cast<std::size_t>(v - a)] = t.reach_left(v);
  }
  // For each left end i, sweep j rightwards keeping the extremes over (i,j).
  for (Vertex i = a; i <= b; ++i) {
    Vertex max_r = kMinusInfinity;
    Vertex min_l = kPlusInfinity;
    for (Vertex j = i + 2; j <= b; ++j) {
      const auto inner = static_cast<std::size_t>(j - 1 - a);
      max_r = std::max(max_r, reach_r[inner]);
      min_l = std::min(min_l, reach_l[inner]);
      const bool crossed = max_r > j || min_l < i;
      if (t.contains(Edge(i, j)) == crossed) return false;
    }
  }
  return true;
}

bool is_valid(const TriangulationDesc& t) {
  const auto [lo, hi] = t.support();
  // Leapfrog arcs reflect through the centre, so an uncovered arc can start
  // up to one hull width away from the edits.
  const Vertex margin =
      std::holds_alternative<Leapfrog>(t.base()) ? hi - lo + 3 : Vertex{3};
  const Vertex a = lo - margin;
  const Vertex b = hi + margin;
  return validate_window(t, a, b, std::max(kDefaultWindowBudget, b - a));
}

}  // namespace infgon
