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

#include "infgon/quantum.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "infgon/error.hpp"
#include "infgon/plucker.hpp"
#include "infgon/quiver.hpp"

namespace infgon {

QElement QElement::scalar(const LaurentHalfQ& c) {
  QElement r;
  r.add_term({}, c);
  return r;
}

void QElement::add_term(const QWord& w, const LaurentHalfQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QElement& QElement::operator+=(const QElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

QElement& QElement::operator-=(const QElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

QElement operator*(const QElement& a, const QElement& b) {
  QElement r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      QWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r += normal_form(w, ca * cb);
    }
  }
  return r;
}

QElement QElement::scaled(const LaurentHalfQ& c) const {
  QElement r;
  for (const auto& [w, k] : terms_) r.add_term(w, k * c);
  return r;
}

std::map<QWord, std::int64_t> QElement::at_one() const {
  std::map<QWord, std::int64_t> out;
  for (const auto& [w, c] : terms_) {
    QWord sorted = w;
    std::sort(sorted.begin(), sorted.end());
    const std::int64_t v = checked::add(out[sorted], c.at_one());
    if (v == 0) {
      out.erase(sorted);
    } else {
      out[sorted] = v;
    }
  }
  return out;
}

std::string QElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, raw] : terms_) {
    const bool negative = raw.is_monomial() && raw.terms().begin()->second < 0;
    const LaurentHalfQ c = negative ? -raw : raw;
    if (!first) {
      os << (negative ? " - " : " + ");
    } else if (negative) {
      os << "-";
    }
    first = false;
    const std::string coeff = c.to_string();
    if (c.terms().size() > 1) {
      os << "(" << coeff << ")";
    } else if (coeff != "1" || w.empty()) {
      os << coeff;
    }
    for (std::size_t k = 0; k < w.size();) {
      std::size_t run = 1;
      while (k + run < w.size() && w[k + run] == w[k]) ++run;
      os << "X[" << w[k].row << "][" << w[k].col << "]";
      if (run > 1) os << "^" << run;
      k += run;
    }
  }
  return os.str();
}

QElement normal_form(const QWord& word, const LaurentHalfQ& coeff) {
  QElement result;
  const LaurentHalfQ q_inv = LaurentHalfQ::q_power(-1);
  const LaurentHalfQ q = LaurentHalfQ::q_power(1);
  const LaurentHalfQ q_diff = q - q_inv;
  std::vector<std::pair<QWord, LaurentHalfQ>> stack{{word, coeff}};
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    if (c.is_zero()) continue;
    std::size_t p = 0;
    while (p + 1 < w.size() && !(w[p + 1] < w[p])) ++p;
    if (p + 1 >= w.size()) {
      result.add_term(w, c);
      continue;
    }
    const QGen a = w[p];
    const QGen b = w[p + 1];
    std::swap(w[p], w[p + 1]);
    if (a.row == b.row) {
      stack.emplace_back(std::move(w), c * q_inv);
    } else if (a.col == b.col) {
      stack.emplace_back(std::move(w), c * q);
    } else if (a.col > b.col) {
      stack.emplace_back(std::move(w), c);
    } else {
      // X[1][i] X[2][j], i<j: swap plus (q - q^{-1}) X[2][i] X[1][j].
      QWord extra = w;
      extra[p] = {2, a.col};
      extra[p + 1] = {1, b.col};
      stack.emplace_back(std::move(w), c);
      stack.emplace_back(std::move(extra), c * q_diff);
    }
  }
  return result;
}

QElement qplucker(Vertex i, Vertex j) {
  if (!(i < j)) {
    throw Error(ErrorCode::BadIndexOrder,
                "quantum Plucker label needs i<j, got (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
  }
  return normal_form({{1, i}, {2, j}}) -
         normal_form({{1, j}, {2, i}}, LaurentHalfQ::q_power(1));
}

int l_entry(const Edge& ij, const Edge& kl) {
  if (crosses(ij, kl)) {
    throw Error(ErrorCode::NotQuasiCommuting,
                to_string(ij) + " and " + to_string(kl) + " cross",
                std::pair{kl.left(), kl.right()});
  }
  const Vertex i = ij.left(), j = ij.right(), k = kl.left(), l = kl.right();
  if (i < j && j < k) return 2;
  if (k < l && l < i) return -2;
  if (i == k && j == l) return 0;
  if (i < k && l < j) return 0;
  if (k < i && j < l) return 0;
  if ((i < k && j == l) || (i == k && j < l) || (j == k)) return 1;
  // k < i, j == l; i == k, l < j; l == i.
  return -1;
}

int verify_quasi_commute(const Edge& ij, const Edge& kl) {
  const QElement a = qplucker(ij) * qplucker(kl);
  const QElement b = qplucker(kl) * qplucker(ij);
  const auto fail = [&] {
    return Error(ErrorCode::NotQuasiCommuting,
                 to_string(ij) + " and " + to_string(kl) + " do not quasi-commute",
                 std::pair{kl.left(), kl.right()});
  };
  const auto& [w, cb] = *b.terms().begin();
  const auto it = a.terms().find(w);
  if (it == a.terms().end()) throw fail();
  const int shift = it->second.terms().begin()->first - cb.terms().begin()->first;
  if (shift % 2 != 0 || b.scaled(LaurentHalfQ::half_power(shift)) != a) throw fail();
  return shift / 2;
}

bool verify_quantum_plucker(Vertex i, Vertex k, Vertex j, Vertex l) {
  if (!(i < k && k < j && j < l)) {
    throw Error(ErrorCode::BadIndexOrder, "quantum Plucker relation needs i<k<j<l");
  }
  const QElement lhs = qplucker(i, j) * qplucker(k, l);
  const QElement rhs = (qplucker(i, k) * qplucker(j, l)).scaled(LaurentHalfQ::q_power(-1)) +
                       (qplucker(i, l) * qplucker(k, j)).scaled(LaurentHalfQ::q_power(1));
  return lhs == rhs;
}

CompatibilityReport compatibility_check(const TriangulationDesc& t, Vertex a, Vertex b,
                                        const LMatrix& l, Vertex budget) {
  CompatibilityReport report;
  const std::vector<Edge> edges = edges_in_window(t, a, b, budget);
  for (const Edge& ij : edges) {
    if (!t.is_mutable(ij)) continue;
    const Quadrilateral quad = quadrilateral_of(t, ij);
    if (quad.v[0] < a || quad.v[3] > b) continue;
    ++report.columns;
    std::vector<std::pair<Edge, int>> column;
    for (const Edge& x : edges) {
      if (const int v = b_entry(t, x, ij); v != 0) column.emplace_back(x, v);
    }
    for (const Edge& kl : edges) {
      int sum = 0;
      for (const auto& [x, v] : column) sum += v * l(x, kl);
      ++report.entries;
      if (sum != (kl == ij ? 2 : 0)) report.failures.emplace_back(ij, kl, sum);
    }
  }
  return report;
}

QuantumTorus::QuantumTorus(std::vector<Edge> order, LMatrix l) : order_(std::move(order)) {
  const std::size_t n = order_.size();
  l_.resize(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t r = 0; r < n; ++r) l_[p * n + r] = l(order_[p], order_[r]);
  }
}

std::vector<int> QuantumTorus::unit(const Edge& e) const {
  std::vector<int> a(order_.size(), 0);
  const auto it = std::find(order_.begin(), order_.end(), e);
  if (it == order_.end()) {
    throw Error(ErrorCode::OutsideWindow, to_string(e) + " is not in the cluster",
                std::pair{e.left(), e.right()});
  }
  a[static_cast<std::size_t>(it - order_.begin())] = 1;
  return a;
}

QTorusElement QuantumTorus::multiply(const QTorusElement& x, const QTorusElement& y) const {
  const std::size_t n = order_.size();
  QTorusElement r;
  for (const auto& [ea, ca] : x) {
    for (const auto& [eb, cb] : y) {
      int s = 0;
      std::vector<int> sum(n);
      for (std::size_t p = 0; p < n; ++p) {
        sum[p] = ea[p] + eb[p];
        for (std::size_t q = 0; q < p; ++q) s += ea[p] * eb[q] * l(p, q);
      }
      LaurentHalfQ& slot = r[sum];
      slot += (ca * cb).shifted(2 * s);
      if (slot.is_zero()) r.erase(sum);
    }
  }
  return r;
}

QTorusElement toric_monomial(const std::vector<int>& a, const QuantumTorus& torus) {
  int h = 0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t r = p + 1; r < a.size(); ++r) h += a[p] * a[r] * torus.l(r, p);
  }
  return {{a, LaurentHalfQ::half_power(h)}};
}

QuantumMutation quantum_mutate(const TriangulationDesc& t, const Edge& e) {
  QuantumCertificate cert{e, Edge(0, 1), quadrilateral_of(t, e), {}, {}, {}, {}, {}, false};
  cert.new_arc = cert.quad.other_diagonal();
  const auto boundary = cert.quad.boundary();
  cert.order.assign(boundary.begin(), boundary.end());
  cert.order.push_back(e);
  std::sort(cert.order.begin(), cert.order.end());
  const QuantumTorus torus(cert.order);

  std::vector<int> plus = torus.unit(e);
  std::vector<int> minus = plus;
  for (int& x : plus) x = -x;
  for (int& x : minus) x = -x;
  for (const Edge& x : boundary) {
    const int v = b_entry(t, x, e);
    const std::vector<int> u = torus.unit(x);
    for (std::size_t p = 0; p < u.size(); ++p) {
      if (v > 0) plus[p] += v * u[p];
      if (v < 0) minus[p] -= v * u[p];
    }
  }
  for (const auto& part : {toric_monomial(plus, torus), toric_monomial(minus, torus)}) {
    for (const auto& [exp, c] : part) {
      LaurentHalfQ& slot = cert.mu[exp];
      slot += c;
      if (slot.is_zero()) cert.mu.erase(exp);
    }
  }
  cert.mu_times = torus.multiply(cert.mu, {{torus.unit(e), LaurentHalfQ::one()}});

  for (const auto& [exp, c] : cert.mu_times) {
    QElement term = QElement::scalar(c);
    for (std::size_t p = 0; p < exp.size(); ++p) {
      if (exp[p] < 0) {
        throw Error(ErrorCode::CertificateFailed, "negative exponent after clearing "
                    "the denominator of " + to_string(e));
      }
      for (int k = 0; k < exp[p]; ++k) term = term * qplucker(cert.order[p]);
    }
    cert.lhs += term;
  }
  cert.rhs = qplucker(cert.new_arc) * qplucker(e);
  cert.verified = cert.lhs == cert.rhs;
  if (!cert.verified) {
    throw Error(ErrorCode::CertificateFailed,
                "quantum exchange certificate failed at " + to_string(e),
                std::pair{e.left(), e.right()});
  }
  return {cert.new_arc, std::move(cert)};
}

QuantumRelation quantum_exchange_relation(const Quadrilateral& quad) {
  const auto& v = quad.v;
  return {Edge(v[0], v[2]),
          Edge(v[1], v[3]),
          {std::pair{Edge(v[0], v[1]), Edge(v[2], v[3])},
           std::pair{Edge(v[0], v[3]), Edge(v[1], v[2])}},
          {-1, 1}};
}

bool quantum_relation_holds(const QuantumRelation& r) {
  const QElement lhs = qplucker(r.lhs_first) * qplucker(r.lhs_second);
  QElement rhs;
  for (std::size_t k = 0; k < 2; ++k) {
    rhs += (qplucker(r.rhs[k].first) * qplucker(r.rhs[k].second))
               .scaled(LaurentHalfQ::q_power(r.qpow[k]));
  }
  return lhs == rhs;
}

std::string to_string(const QuantumRelation& r) {
  auto power = [](int s) {
    return LaurentHalfQ::q_power(s).to_string();
  };
  std::ostringstream os;
  os << delta_name(r.lhs_first, true) << delta_name(r.lhs_second, true) << " = ";
  for (std::size_t k = 0; k < 2; ++k) {
    if (k > 0) os << " + ";
    const std::string p = power(r.qpow[k]);
    if (p != "1") os << p;
    os << delta_name(r.rhs[k].first, true) << delta_name(r.rhs[k].second, true);
  }
  return os.str();
}

}  // namespace infgon
