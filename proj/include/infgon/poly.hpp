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

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "infgon/error.hpp"

namespace infgon {

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow");
  return r;
}

}  // namespace checked

/// Exponent vector with sorted variables and positive exponents.
template <class Var>
using Monomial = std::vector<std::pair<Var, int>>;

/// Lexicographic monomial order: the smallest variable is the most
/// significant, higher exponent is larger.
template <class Var>
struct LexLess {
  bool operator()(const Monomial<Var>& a, const Monomial<Var>& b) const {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (ia->first != ib->first) return ib->first < ia->first;
      if (ia->second != ib->second) return ia->second < ib->second;
      ++ia;
      ++ib;
    }
    return ia == a.end() && ib != b.end();
  }
};

template <class Var>
Monomial<Var> monomial_mul(const Monomial<Var>& a, const Monomial<Var>& b) {
  Monomial<Var> r;
  r.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      r.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      r.push_back(*ib++);
    } else {
      r.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return r;
}

/// a / b when b divides a.
template <class Var>
std::optional<Monomial<Var>> monomial_div(const Monomial<Var>& a, const Monomial<Var>& b) {
  Monomial<Var> r;
  auto ia = a.begin();
  for (const auto& [v, e] : b) {
    while (ia != a.end() && ia->first < v) r.push_back(*ia++);
    if (ia == a.end() || ia->first != v || ia->second < e) return std::nullopt;
    if (ia->second > e) r.emplace_back(v, ia->second - e);
    ++ia;
  }
  r.insert(r.end(), ia, a.end());
  return r;
}

template <class Var>
Monomial<Var> monomial_gcd(const Monomial<Var>& a, const Monomial<Var>& b) {
  Monomial<Var> r;
  auto ib = b.begin();
  for (const auto& [v, e] : a) {
    while (ib != b.end() && ib->first < v) ++ib;
    if (ib != b.end() && ib->first == v) r.emplace_back(v, std::min(e, ib->second));
  }
  return r;
}

/// Sparse multivariate polynomial with int64 coefficients; every operation
/// checks for overflow.
template <class Var>
class Poly {
 public:
  using Mono = Monomial<Var>;
  using Terms = std::map<Mono, std::int64_t, LexLess<Var>>;

  Poly() = default;
  static Poly constant(std::int64_t c) {
    Poly p;
    if (c != 0) p.terms_[{}] = c;
    return p;
  }
  static Poly variable(const Var& v) { return term({{v, 1}}, 1); }
  static Poly term(Mono m, std::int64_t c) {
    Poly p;
    if (c != 0) p.terms_[std::move(m)] = c;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  /// Largest term under LexLess. Precondition: nonzero.
  std::pair<Mono, std::int64_t> leading() const { return *terms_.rbegin(); }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, checked::sub(0, c));
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return a.scaled(-1); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.accumulate(monomial_mul(ma, mb), checked::mul(ca, cb));
    }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly scaled(std::int64_t c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, checked::mul(k, c));
    return r;
  }
  Poly times_monomial(const Mono& m) const {
    Poly r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(monomial_mul(mm, m), c);
    return r;
  }

  /// Exact integer division of every coefficient.
  Poly divided_by(std::int64_t c) const {
    Poly r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k / c);
    return r;
  }

  /// gcd of all coefficients (0 for the zero polynomial).
  std::int64_t content() const {
    std::int64_t g = 0;
    for (const auto& [m, c] : terms_) g = std::gcd(g, c);
    return g;
  }

  /// gcd of all monomials (empty for zero or constant terms).
  Mono monomial_content() const {
    if (terms_.empty()) return {};
    Mono g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) g = monomial_gcd(g, m);
    return g;
  }

  Poly divided_by_monomial(const Mono& m) const {
    Poly r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(*monomial_div(mm, m), c);
    return r;
  }

  std::int64_t evaluate(const std::function<std::int64_t(const Var&)>& value) const {
    std::int64_t total = 0;
    for (const auto& [m, c] : terms_) {
      std::int64_t t = c;
      for (const auto& [v, e] : m) {
        const std::int64_t x = value(v);
        for (int k = 0; k < e; ++k) t = checked::mul(t, x);
      }
      total = checked::add(total, t);
    }
    return total;
  }

  std::string to_string(const std::function<std::string(const Var&)>& name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::int64_t k = c;
      if (!first) {
        os << (k < 0 ? " - " : " + ");
        if (k < 0) k = -k;
      } else if (k < 0 && !m.empty() && k == -1) {
        os << "-";
        k = 1;
      }
      first = false;
      if (m.empty() || k != 1) os << k;
      for (const auto& [v, e] : m) {
        os << name(v);
        if (e > 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void accumulate(const Mono& m, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = checked::add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// a / b when the division is exact in Z[vars]; nullopt otherwise.
template <class Var>
std::optional<Poly<Var>> exact_divide(Poly<Var> a, const Poly<Var>& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidDescriptor, "division by zero polynomial");
  const auto [lm_b, lc_b] = b.leading();
  Poly<Var> q;
  while (!a.is_zero()) {
    const auto [lm_a, lc_a] = a.leading();
    const auto m = monomial_div(lm_a, lm_b);
    if (!m || lc_a % lc_b != 0) return std::nullopt;
    const Poly<Var> t = Poly<Var>::term(*m, lc_a / lc_b);
    q += t;
    a -= t * b;
  }
  return q;
}

}  // namespace infgon
