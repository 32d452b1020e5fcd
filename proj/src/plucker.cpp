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

#include "infgon/plucker.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "infgon/error.hpp"
#include "infgon/quiver.hpp"

namespace infgon {

std::string delta_name(const PluckerLabel& p, bool quantum) {
  const std::string head = quantum ? "Δ_q^{" : "Δ^{";
  const bool compact = p.left() >= 0 && p.right() <= 9;
  const std::string sep = compact ? "" : ",";
  return head + std::to_string(p.left()) + sep + std::to_string(p.right()) + "}";
}

std::string to_string(const MatrixPoly& p) {
  return p.to_string([](const MatrixVar& v) {
    return "x[" + std::to_string(v.row) + "][" + std::to_string(v.col) + "]";
  });
}

MatrixPoly plucker_expand(const PluckerLabel& p) {
  using M = Monomial<MatrixVar>;
  const MatrixVar a{1, p.left()}, b{2, p.right()}, c{1, p.right()}, d{2, p.left()};
  return MatrixPoly::term(M{{a, 1}, {b, 1}}, 1) + MatrixPoly::term(M{{c, 1}, {d, 1}}, -1);
}

bool verify_short_plucker(Vertex i, Vertex k, Vertex j, Vertex l) {
  if (!(i < k && k < j && j < l)) {
    throw Error(ErrorCode::BadIndexOrder, "short Plucker relation needs i<k<j<l");
  }
  const MatrixPoly r = plucker_expand(Edge(i, j)) * plucker_expand(Edge(k, l)) -
                       plucker_expand(Edge(i, k)) * plucker_expand(Edge(j, l)) -
                       plucker_expand(Edge(i, l)) * plucker_expand(Edge(k, j));
  return r.is_zero();
}

RelationRecord exchange_relation(const Quadrilateral& quad, const Edge& old_arc) {
  const auto& v = quad.v;
  const Edge other = quad.diagonal == old_arc ? quad.other_diagonal() : quad.diagonal;
  return {{other, old_arc},
          {std::pair{Edge(v[0], v[1]), Edge(v[2], v[3])},
           std::pair{Edge(v[0], v[3]), Edge(v[1], v[2])}}};
}

MatrixPoly relation_residue(const RelationRecord& r) {
  MatrixPoly out = plucker_expand(r.lhs[0]) * plucker_expand(r.lhs[1]);
  for (const auto& [x, y] : r.rhs) out -= plucker_expand(x) * plucker_expand(y);
  return out;
}

std::string to_string(const RelationRecord& r) {
  return delta_name(r.lhs[0]) + delta_name(r.lhs[1]) + " = " +
         delta_name(r.rhs[0].first) + delta_name(r.rhs[0].second) + " + " +
         delta_name(r.rhs[1].first) + delta_name(r.rhs[1].second);
}

PluckerLabel ClusterState::variable(const Edge& e) const {
  if (!desc.has_edge(e)) {
    throw Error(ErrorCode::NotInTriangulation,
                to_string(e) + " is not in the triangulation", std::pair{e.left(), e.right()});
  }
  return e;
}

std::vector<PluckerLabel> ClusterState::coefficients(Vertex a, Vertex b) const {
  std::vector<PluckerLabel> out;
  for (Vertex v = a; v < b; ++v) out.emplace_back(v, v + 1);
  if (const auto br = desc.bridge(); br && br->left() >= a && br->right() <= b) {
    out.push_back(*br);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExchangeResult exchange_flip(const ClusterState& s, const Edge& e) {
  FlipResult f = flip(s.desc, e);
  RelationRecord rel = exchange_relation(f.quad, e);
  if (!relation_holds(rel)) {
    throw Error(ErrorCode::RelationCheckFailed,
                "exchange relation does not expand to zero: " + to_string(rel),
                std::pair{e.left(), e.right()});
  }
  ClusterState next(std::move(f.desc));
  next.history = s.history;
  next.history.push_back(e);
  return {std::move(next), f.new_arc, f.quad, rel};
}

LabelPredicate subalgebra_generators(const TriangulationClass& c) {
  switch (c.kind) {
    case TriangulationClass::Kind::LocallyFinite:
      return [](const PluckerLabel&) { return true; };
    case TriangulationClass::Kind::FountainAt:
      return [k = c.first](const PluckerLabel& p) {
        return p.right() <= k || k <= p.left();
      };
    case TriangulationClass::Kind::SplitFountainAt:
      return [l = c.first, r = c.second](const PluckerLabel& p) {
        return p.right() <= l || (l <= p.left() && p.right() <= r) || r <= p.left();
      };
  }
  return [](const PluckerLabel&) { return false; };
}

std::set<PluckerLabel> reachable_variable_closure(const ClusterState& s,
                                                  const ClosureOptions& opt) {
  using Key = std::pair<EdgeSet, EdgeSet>;
  std::set<PluckerLabel> labels;
  std::set<Key> seen{{s.desc.removed(), s.desc.added()}};
  std::deque<std::pair<TriangulationDesc, std::size_t>> queue{{s.desc, 0}};
  while (!queue.empty()) {
    auto [t, depth] = std::move(queue.front());
    queue.pop_front();
    const std::vector<Edge> arcs = arcs_in_window(t, opt.a, opt.b);
    labels.insert(arcs.begin(), arcs.end());
    if (depth >= opt.max_depth) continue;
    for (const Edge& e : arcs) {
      if (!t.is_mutable(e)) continue;
      const Quadrilateral quad = quadrilateral_of(t, e);
      if (quad.v[0] < opt.a || quad.v[3] > opt.b) continue;
      TriangulationDesc next = flip(t, e).desc;
      if (seen.emplace(next.removed(), next.added()).second) {
        if (seen.size() > opt.max_states) {
          throw Error(ErrorCode::BudgetExceeded,
                      "more than " + std::to_string(opt.max_states) + " states reached");
        }
        queue.emplace_back(std::move(next), depth + 1);
      }
    }
  }
  return labels;
}

// ---------------------------------------------------------------------------

namespace {

using P = RationalExpr::P;

/// p = c * m * rest with rest primitive, monomial-free, positive leading
/// coefficient. Returns (c * m, rest).
std::pair<P, P> split_monomial(const P& p) {
  const auto m = p.monomial_content();
  P rest = p.divided_by_monomial(m);
  std::int64_t c = rest.content();
  if (rest.leading().second < 0) c = -c;
  rest = rest.divided_by(c);
  return {P::term(m, c), rest};
}

bool remove_one(std::vector<P>& v, const P& x) {
  const auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) return false;
  v.erase(it);
  return true;
}

P product(const std::vector<P>& v) {
  P r = P::constant(1);
  for (const P& f : v) r *= f;
  return r;
}

}  // namespace

RationalExpr RationalExpr::variable(const Edge& e) {
  RationalExpr r;
  r.num_ = P::variable(e);
  return r;
}

RationalExpr RationalExpr::constant(std::int64_t c) {
  RationalExpr r;
  r.num_ = P::constant(c);
  return r;
}

P RationalExpr::denominator() const { return mono_ * product(factors_); }

void RationalExpr::reduce() {
  if (num_.is_zero()) {
    mono_ = P::constant(1);
    factors_.clear();
    return;
  }
  for (auto it = factors_.begin(); it != factors_.end();) {
    if (auto q = exact_divide(num_, *it)) {
      num_ = std::move(*q);
      it = factors_.erase(it);
    } else {
      ++it;
    }
  }
  auto [m, c] = mono_.leading();
  const auto g = monomial_gcd(num_.monomial_content(), m);
  num_ = num_.divided_by_monomial(g);
  m = *monomial_div(m, g);
  std::int64_t k = std::gcd(num_.content(), c);
  if (c < 0) k = -k;
  num_ = num_.divided_by(k);
  mono_ = P::term(m, c / k);
  std::sort(factors_.begin(), factors_.end(),
            [](const P& x, const P& y) { return x.terms() < y.terms(); });
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  RationalExpr r;
  r.num_ = a.num_ * b.num_;
  r.mono_ = a.mono_ * b.mono_;
  r.factors_ = a.factors_;
  r.factors_.insert(r.factors_.end(), b.factors_.begin(), b.factors_.end());
  r.reduce();
  return r;
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  if (b.num_.is_zero()) {
    throw Error(ErrorCode::InvalidDescriptor, "division by a zero rational expression");
  }
  RationalExpr r;
  r.num_ = a.num_ * b.mono_ * product(b.factors_);
  auto [mono, rest] = split_monomial(b.num_);
  r.mono_ = a.mono_ * mono;
  r.factors_ = a.factors_;
  if (!rest.is_constant()) r.factors_.push_back(rest);
  r.reduce();
  return r;
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  const auto [ma, ca] = a.mono_.leading();
  const auto [mb, cb] = b.mono_.leading();
  const auto g = monomial_gcd(ma, mb);
  const std::int64_t k = std::gcd(ca, cb);
  // Cofactors that lift each denominator to the common one.
  P lift_a = P::term(*monomial_div(mb, g), cb / k);
  P lift_b = P::term(*monomial_div(ma, g), ca / k);
  std::vector<P> only_b = b.factors_;
  std::vector<P> common;
  std::vector<P> only_a;
  for (const P& f : a.factors_) {
    if (remove_one(only_b, f)) {
      common.push_back(f);
    } else {
      only_a.push_back(f);
    }
  }
  lift_a *= product(only_b);
  lift_b *= product(only_a);
  RationalExpr r;
  r.num_ = a.num_ * lift_a + b.num_ * lift_b;
  r.mono_ = a.mono_ * P::term(*monomial_div(mb, g), cb / k);
  r.factors_ = common;
  r.factors_.insert(r.factors_.end(), only_a.begin(), only_a.end());
  r.factors_.insert(r.factors_.end(), only_b.begin(), only_b.end());
  r.reduce();
  return r;
}

std::string RationalExpr::to_string() const {
  auto name = [](const Edge& e) { return "x" + infgon::to_string(e); };
  const P den = denominator();
  const std::string n = num_.to_string(name);
  if (den == P::constant(1)) return n;
  return "(" + n + ")/(" + den.to_string(name) + ")";
}

RationalExpr laurent_expand(const ClusterState& s, const std::vector<Edge>& flips,
                            const Edge& target, Vertex a, Vertex b) {
  std::map<Edge, RationalExpr> value;
  for (const Edge& e : edges_in_window(s.desc, a, b)) value[e] = RationalExpr::variable(e);
  TriangulationDesc t = s.desc;
  for (const Edge& f : flips) {
    const Quadrilateral quad = quadrilateral_of(t, f);
    if (quad.v[0] < a || quad.v[3] > b) {
      throw Error(ErrorCode::OutsideWindow,
                  "quadrilateral of " + to_string(f) + " leaves the window",
                  std::pair{f.left(), f.right()});
    }
    RationalExpr plus = RationalExpr::constant(1);
    RationalExpr minus = RationalExpr::constant(1);
    for (const Edge& x : quad.boundary()) {
      const int v = b_entry(t, x, f);
      for (int k = 0; k < std::abs(v); ++k) {
        (v > 0 ? plus : minus) = (v > 0 ? plus : minus) * value.at(x);
      }
    }
    RationalExpr next = (plus + minus) / value.at(f);
    FlipResult r = flip(t, f);
    value.erase(f);
    value[r.new_arc] = std::move(next);
    t = std::move(r.desc);
  }
  if (!t.has_edge(target)) {
    throw Error(ErrorCode::NotInTriangulation,
                to_string(target) + " is not in the triangulation",
                std::pair{target.left(), target.right()});
  }
  const auto it = value.find(target);
  if (it == value.end()) {
    throw Error(ErrorCode::OutsideWindow, to_string(target) + " lies outside the window",
                std::pair{target.left(), target.right()});
  }
  return it->second;
}

}  // namespace infgon
