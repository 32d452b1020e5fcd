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
#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "infgon/poly.hpp"
#include "infgon/triangulation.hpp"

namespace infgon {

/// Plucker coordinate labels are edges: (i,j) with i<j.
using PluckerLabel = Edge;

/// "Δ^{02}" for small nonnegative indices, "Δ^{-1,2}" otherwise; "Δ_q" when
/// quantum.
std::string delta_name(const PluckerLabel& p, bool quantum = false);

/// Matrix entry x[row][col] of the commutative 2 x Z matrix.
struct MatrixVar {
  int row = 1;
  Vertex col = 0;
  friend auto operator<=>(const MatrixVar&, const MatrixVar&) = default;
};

using MatrixPoly = Poly<MatrixVar>;

std::string to_string(const MatrixPoly& p);

/// x[1][i] x[2][j] - x[1][j] x[2][i].
MatrixPoly plucker_expand(const PluckerLabel& p);

/// Delta^{ij} Delta^{kl} - Delta^{ik} Delta^{jl} - Delta^{il} Delta^{kj} = 0,
/// checked by expansion. BadIndexOrder unless i<k<j<l.
bool verify_short_plucker(Vertex i, Vertex k, Vertex j, Vertex l);

/// lhs[0] * lhs[1] = rhs[0].first * rhs[0].second + rhs[1].first * rhs[1].second
struct RelationRecord {
  std::array<PluckerLabel, 2> lhs;  // new label, flipped label
  std::array<std::pair<PluckerLabel, PluckerLabel>, 2> rhs;
  friend bool operator==(const RelationRecord&, const RelationRecord&) = default;
};

/// The relation of a flip inside `quad` replacing `old_arc`.
RelationRecord exchange_relation(const Quadrilateral& quad, const Edge& old_arc);
/// lhs - rhs expanded in matrix entries.
MatrixPoly relation_residue(const RelationRecord& r);
inline bool relation_holds(const RelationRecord& r) { return relation_residue(r).is_zero(); }
std::string to_string(const RelationRecord& r);

/// A triangulation with its cluster: every realized edge (i,j) carries
/// Delta^{ij}; sides and the bridge are coefficients.
struct ClusterState {
  TriangulationDesc desc;
  std::vector<Edge> history;  // flipped arcs, in order

  explicit ClusterState(TriangulationDesc d) : desc(std::move(d)) {}

  /// Cluster variable on a realized arc; NotInTriangulation otherwise.
  PluckerLabel variable(const Edge& e) const;
  /// Frozen labels inside [a,b].
  std::vector<PluckerLabel> coefficients(Vertex a, Vertex b) const;
};

struct ExchangeResult {
  ClusterState state;
  Edge new_arc;
  Quadrilateral quad;
  RelationRecord relation;
};

ExchangeResult exchange_flip(const ClusterState& s, const Edge& e);

using LabelPredicate = std::function<bool(const PluckerLabel&)>;

/// Membership in the generating set of the cluster algebra attached to the
/// class.
LabelPredicate subalgebra_generators(const TriangulationClass& c);

struct ClosureOptions {
  Vertex a = -4;
  Vertex b = 4;
  std::size_t max_depth = static_cast<std::size_t>(-1);
  std::size_t max_states = 200000;
};

/// Labels of all arcs inside [a,b] over the states reached by at most
/// max_depth flips whose quadrilaterals stay inside [a,b]. BudgetExceeded
/// past max_states.
std::set<PluckerLabel> reachable_variable_closure(const ClusterState& s,
                                                  const ClosureOptions& opt);

/// num / (mono * prod(factors)), factors primitive, monomial-free and not yet
/// cancelled against num.
class RationalExpr {
 public:
  using P = Poly<Edge>;

  RationalExpr() = default;
  static RationalExpr variable(const Edge& e);
  static RationalExpr constant(std::int64_t c);

  const P& numerator() const { return num_; }
  P denominator() const;
  /// Denominator is a single monomial.
  bool is_laurent() const { return factors_.empty(); }

  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  friend bool operator==(const RationalExpr&, const RationalExpr&) = default;

  std::string to_string() const;

 private:
  void reduce();

  P num_;
  P mono_ = P::constant(1);
  std::vector<P> factors_;
};

/// The variable on `target` after `flips`, in the initial variables x_e of
/// the edges in [a,b], by iterating the exchange relation.
RationalExpr laurent_expand(const ClusterState& s, const std::vector<Edge>& flips,
                            const Edge& target, Vertex a, Vertex b);

}  // namespace infgon
