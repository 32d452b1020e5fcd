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
#include <map>
#include <string>

namespace infgon {

/// Element of Z[q^{1/2}, q^{-1/2}]. Keys count powers of q^{1/2}.
class LaurentHalfQ {
 public:
  LaurentHalfQ() = default;
  explicit LaurentHalfQ(std::int64_t c) {
    if (c != 0) terms_[0] = c;
  }
  /// c * q^{h/2}.
  static LaurentHalfQ half_power(int h, std::int64_t c = 1);
  /// c * q^s.
  static LaurentHalfQ q_power(int s, std::int64_t c = 1) { return half_power(2 * s, c); }
  static LaurentHalfQ one() { return LaurentHalfQ(1); }

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Single term c * q^{h/2}.
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentHalfQ& operator+=(const LaurentHalfQ& o);
  LaurentHalfQ& operator-=(const LaurentHalfQ& o);
  friend LaurentHalfQ operator+(LaurentHalfQ a, const LaurentHalfQ& b) { return a += b; }
  friend LaurentHalfQ operator-(LaurentHalfQ a, const LaurentHalfQ& b) { return a -= b; }
  friend LaurentHalfQ operator-(const LaurentHalfQ& a);
  friend LaurentHalfQ operator*(const LaurentHalfQ& a, const LaurentHalfQ& b);
  LaurentHalfQ& operator*=(const LaurentHalfQ& o) { return *this = *this * o; }
  friend bool operator==(const LaurentHalfQ&, const LaurentHalfQ&) = default;
  friend auto operator<=>(const LaurentHalfQ&, const LaurentHalfQ&) = default;

  /// Multiplies by q^{h/2}.
  LaurentHalfQ shifted(int h) const;

  /// Value at q^{1/2} = 1.
  std::int64_t at_one() const;

  /// "q^{-1} + 2q^{1/2}"-style text.
  std::string to_string() const;

 private:
  std::map<int, std::int64_t> terms_;
};

}  // namespace infgon
