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
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "infgon/laurent_q.hpp"
#include "infgon/triangulation.hpp"

namespace infgon {

/// Generator X[row][col] of the two-row quantum matrix algebra.
struct QGen {
  int row = 1;  // 1 or 2
  Vertex col = 0;
  friend bool operator==(const QGen&, const QGen&) = default;
  /// Normal order: row 2 before row 1, then ascending columns.
  friend std::strong_ordering operator<=>(const QGen& a, const QGen& b) {
    if (a.row != b.row) return a.row == 2 ? std::strong_ordering::less
                                          : std::strong_ordering::greater;
    return a.col <=> b.col;
  }
};

/// Flat generator sequence; normal ordered when it appears as a QElement key.
using QWord = std::vector<QGen>;

class QElement {
 public:
  QElement() = default;
  static QElement scalar(const LaurentHalfQ& c);

  const std::map<QWord, LaurentHalfQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  QElement& operator+=(const QElement& o);
  QElement& operator-=(const QElement& o);
  friend QElement operator+(QElement a, const QElement& b) { return a += b; }
  friend QElement operator-(QElement a, const QElement& b) { return a -= b; }
  friend QElement operator*(const QElement& a, const QElement& b);
  friend bool operator==(const QElement&, const QElement&) = default;

  QElement scaled(const LaurentHalfQ& c) const;

  /// Coefficients specialized at q^{1/2} = 1, keyed by sorted word.
  std::map<QWord, std::int64_t> at_one() const;

  std::string to_string() const;

 private:
  friend QElement normal_form(const QWord& word, const LaurentHalfQ& coeff);
  void add_term(const QWord& w, const LaurentHalfQ& c);

  std::map<QWord, LaurentHalfQ> terms_;
};

QElement normal_form(const QWord& word, const LaurentHalfQ& coeff = LaurentHalfQ::one());

/// Delta_q^{ij} = X[1][i]X[2][j] - q X[1][j]X[2][i]. BadIndexOrder unless i<j.
QElement qplucker(Vertex i, Vertex j);
inline QElement qplucker(const Edge& e) { return qplucker(e.left(), e.right()); }

/// Exponent of q exchanging two quantum Plucker coordinates with non-crossing
/// labels. NotQuasiCommuting when the labels cross.
int l_entry(const Edge& ij, const Edge& kl);

using LMatrix = std::function<int(const Edge&, const Edge&)>;

/// The s with Delta_q^{ij} Delta_q^{kl} = q^s Delta_q^{kl} Delta_q^{ij}, found
/// from normal forms alone.
int verify_quasi_commute(const Edge& ij, const Edge& kl);

bool verify_quantum_plucker(Vertex i, Vertex k, Vertex j, Vertex l);

struct CompatibilityReport {
  std::size_t columns = 0;
  std::size_t entries = 0;
  /// (column, row, value of (B^T L)) for every entry off 2*delta.
  std::vector<std::tuple<Edge, Edge, int>> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks (B^T L) = 2*delta on mutable columns whose B support sits in [a,b],
/// against every edge row in [a,b].
CompatibilityReport compatibility_check(const TriangulationDesc& t, Vertex a, Vertex b,
                                        const LMatrix& l = l_entry,
                                        Vertex budget = kDefaultWindowBudget);

using QTorusElement = std::map<std::vector<int>, LaurentHalfQ>;

/// Quantum torus of one cluster; exponent vectors are indexed by `order`.
class QuantumTorus {
 public:
  QuantumTorus(std::vector<Edge> order, LMatrix l = l_entry);

  const std::vector<Edge>& order() const { return order_; }
  int l(std::size_t p, std::size_t r) const { return l_[p * order_.size() + r]; }

  /// Product of ordered monomials x^(a) x^(b) = q^{sum_{p>r} a_p b_r L_pr} x^(a+b).
  QTorusElement multiply(const QTorusElement& x, const QTorusElement& y) const;
  std::vector<int> unit(const Edge& e) const;

 private:
  std::vector<Edge> order_;
  std::vector<int> l_;
};

/// M(a) = q^{(1/2) sum_{p<r} a_p a_r L_rp} x^(a).
QTorusElement toric_monomial(const std::vector<int>& a, const QuantumTorus& torus);

struct QuantumCertificate {
  Edge old_arc;
  Edge new_arc;
  Quadrilateral quad;
  std::vector<Edge> order;
  QTorusElement mu;        // mu(Delta_q of old_arc), two terms
  QTorusElement mu_times;  // mu * x_old, nonnegative exponents
  QElement lhs;            // substituted mu_times
  QElement rhs;            // NF(Delta_q^{new} Delta_q^{old})
  bool verified = false;
};

struct QuantumMutation {
  Edge label;
  QuantumCertificate certificate;
};

QuantumMutation quantum_mutate(const TriangulationDesc& t, const Edge& e);

/// Delta(v0,v2) Delta(v1,v3) = q^{-1} Delta(v0,v1) Delta(v2,v3) + q Delta(v0,v3) Delta(v1,v2).
struct QuantumRelation {
  Edge lhs_first, lhs_second;
  std::array<std::pair<Edge, Edge>, 2> rhs;
  std::array<int, 2> qpow{-1, 1};
};

QuantumRelation quantum_exchange_relation(const Quadrilateral& quad);
bool quantum_relation_holds(const QuantumRelation& r);

std::string to_string(const QuantumRelation& r);

}  // namespace infgon
